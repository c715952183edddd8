"""Per-criterion outcomes collected by test_acceptance and printed at session end."""

RESULTS = {}


def record(number, text, ok):
    RESULTS[number] = (bool(ok), text)
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {text}")
    return ok
