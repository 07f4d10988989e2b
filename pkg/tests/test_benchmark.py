import runpy
from pathlib import Path

BENCH = Path(__file__).resolve().parent.parent / "benchmarks" / "bench_kernels.py"


def test_benchmark_runs_and_backends_agree(capsys):
    mod = runpy.run_path(str(BENCH))
    rows = mod["main"](["--quick", "--repeat", "1"])
    assert len(rows) == 5
    assert "speedup" in capsys.readouterr().out
