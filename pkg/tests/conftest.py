import random
import sys

import pytest

from curvequiv.words import Letter, Word, cyclic_core


def random_letters(rng: random.Random, length: int, rank: int = 2) -> list[Letter]:
    """Raw (not necessarily reduced) letter sequence."""
    return [Letter(rng.randrange(rank), rng.choice((1, -1))) for _ in range(length)]


def random_word(rng: random.Random, max_len: int = 12, rank: int = 2, min_len: int = 0) -> Word:
    """Freely reduced word with length in [min_len, max_len], built letter by letter."""
    n = rng.randint(min_len, max_len)
    letters: list[Letter] = []
    while len(letters) < n:
        letter = Letter(rng.randrange(rank), rng.choice((1, -1)))
        if letters and letters[-1] == letter.inverse():
            continue
        letters.append(letter)
    return Word(tuple(letters))


def random_nontrivial(rng: random.Random, max_len: int = 12, rank: int = 2) -> Word:
    """Random word whose conjugacy class is not trivial."""
    while True:
        w = random_word(rng, max_len, rank, min_len=1)
        if not cyclic_core(w).is_identity():
            return w


@pytest.fixture
def rng():
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(results, key=lambda k: int(k.split()[0][2:])):
        ok, detail = results[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
