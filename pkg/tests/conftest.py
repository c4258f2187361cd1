import random

import pytest

from mary.mseq import MSequence

_CRITERIA = []


def random_sequences(count, seed, low=2, high=9, length=8):
    rng = random.Random(seed)
    return [MSequence.finite([rng.randint(low, high) for _ in range(length)]) for _ in range(count)]


def battery():
    """Constant 2..6, factorial, a few explicit lists and random ones."""
    seqs = [MSequence.constant(m) for m in range(2, 7)]
    seqs.append(MSequence.factorial())
    seqs.append(MSequence.finite([2, 3]))
    seqs.append(MSequence((3, 2, 5), "const", 4))
    seqs.append(MSequence((4, 2), "succ"))
    seqs.extend(random_sequences(4, seed=11, length=6))
    return seqs


@pytest.fixture(scope="session")
def sequence_battery():
    return battery()


@pytest.fixture
def criterion():
    def record(number, ok, detail=""):
        _CRITERIA.append((str(number), bool(ok), detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in _CRITERIA:
        terminalreporter.write_line(f"criterion {number:>3}: {'PASS' if ok else 'FAIL'}  {detail}")
