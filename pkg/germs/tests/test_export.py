from src.diagnostics import growth_report, hilbert_inverse_norm
from src.export import growth_frame, hilbert_frame, series_frame, sweep_frame, to_csv
from src.series import Series1


def test_hilbert_frame_columns():
    frame = hilbert_frame([hilbert_inverse_norm(k) for k in (0, 1, 2)])
    assert list(frame.columns) == ['k', 'value', 'prediction', 'ratio']
    assert frame['k'].tolist() == [0, 1, 2]
    assert frame['prediction'].isna().tolist() == [True, False, False]


def test_growth_frame_rows():
    report = growth_report(Series1(7, [1] * 8), window=3)
    frame = growth_frame(report)
    assert frame['n'].tolist() == list(range(1, 8))
    assert frame['window_max'].tolist() == [1.0] * 7


def test_sweep_frame_keeps_input_order():
    records = [
        {'lam': "2", 'trend': 'geometric-bounded', 'root_test_last': 0.0, 'window_max_last': 1.0, 'transport': "x"},
        {'lam': "1/2", 'trend': 'geometric-bounded', 'root_test_last': 0.0, 'window_max_last': 1.0, 'transport': "x"},
    ]
    assert sweep_frame(records)['lam'].tolist() == ["2", "1/2"]


def test_empty_series_frame():
    assert list(series_frame([]).columns) == ['xk', 'yk', 'c']


def test_csv_text_and_file(tmp_path):
    frame = series_frame([{'k': 1, 'c': "1/3"}])
    target = tmp_path / "out.csv"
    text = to_csv(frame, str(target))
    assert text == "k,c\n1,1/3\n"
    assert target.read_text() == text


def test_floats_keep_full_precision():
    frame = hilbert_frame([hilbert_inverse_norm(1)])
    row = to_csv(frame).splitlines()[1]
    assert row.startswith("1,15.21110255092")
