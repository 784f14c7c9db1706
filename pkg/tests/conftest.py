import os
import sys

sys.path.insert(0, os.path.dirname(__file__))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section('acceptance criteria')
    for n in sorted(RESULTS):
        text, ok = RESULTS[n]
        terminalreporter.write_line(f'[{"PASS" if ok else "FAIL"}] {n}. {text}')
