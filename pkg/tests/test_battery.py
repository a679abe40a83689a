from misiurewicz import battery
from misiurewicz.battery import BatteryConfig, run, summarize


def test_default_battery_has_no_failures():
    items = run()
    counts = summarize(items)
    assert counts["fail"] == 0, [i for i in items if i.status == "fail"]
    assert counts["inconclusive"] == 0
    assert {i.scope for i in items} == set(battery.SCOPES)
    assert sum(i.scope == "table1" for i in items) == 60
    assert sum(i.scope == "base27" for i in items) == 28


def test_base27_truncated_never_fails():
    items = run(["base27"], BatteryConfig(mode="truncated"))
    assert all(i.status == "pass" for i in items if i.name.startswith("P(") and i.name[2] in "345")
    assert all(i.status != "fail" for i in items)


def test_small_types_are_bounded():
    from misiurewicz.orbit import misiurewicz_degree
    ts = battery.small_types(64)
    assert all(misiurewicz_degree(*t) <= 64 for t in ts)
    assert (2, 6) in ts and (2, 7) not in ts
