import pytest

from qweight import _core, _kernels_py

BACKENDS = {"python": _kernels_py}
if _core._c is not None:
    BACKENDS["cython"] = _core._c


@pytest.fixture(params=sorted(BACKENDS))
def kernels(request):
    return BACKENDS[request.param]


def pytest_report_header(config):
    return f"qweight kernel backend: {_core.BACKEND}"


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py" in getattr(rep, "nodeid", "") and rep.when == "call":
                name = rep.nodeid.split("::")[-1].removeprefix("test_")
                lines.append(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: s.split()[1]):
            terminalreporter.write_line(line)
