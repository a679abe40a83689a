import json

from misiurewicz.report import plot_rows, render
from misiurewicz.vtable import VRow, compute_table


def _rows():
    return [VRow(6, 23, 30, "ok", "closed_form", "truncated", 51, 0.1),
            VRow(6, 19, 24, "ok", "closed_form", "truncated", 45, 0.1),
            VRow(9, 2, None, "inconclusive", "budget", "exact", None, 0.0)]


def test_text_marks_exceedance_and_inconclusive():
    text = render(_rows(), "text")
    lines = text.splitlines()
    assert lines[1].endswith("*") and "inconclusive" in lines[3]
    assert "1 with v2(tr) > m+p" in lines[-1]


def test_csv_and_json_columns_stable():
    csv_text = render(_rows(), "csv")
    assert csv_text.splitlines()[0] == "m,p,v2_trace,m_plus_p,exceeds,status,method,mode,precision"
    assert csv_text.splitlines()[3].startswith("9,2,,11,no,inconclusive")
    doc = json.loads(render(_rows(), "json", timings=True))
    assert doc["columns"][-1] == "seconds" and doc["rows"][0]["exceeds"] is True


def test_plot_file(tmp_path):
    path = plot_rows(_rows(), tmp_path / "v.png")
    assert path.read_bytes()[:4] == b"\x89PNG"


def test_threads_do_not_change_results():
    pairs = [(4, 3), (5, 5), (6, 2), (7, 23)]
    a = compute_table(pairs, threads=1)
    b = compute_table(pairs, threads=4)
    assert [r.as_dict(False) for r in a] == [r.as_dict(False) for r in b]
