import itertools

from hypothesis import settings

settings.register_profile("default", derandomize=True, deadline=None, print_blob=True)
settings.load_profile("default")


def perm_from_cycles(cycles, degree):
    """0-based image tuple built directly from cycles."""
    images = list(range(degree))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            images[a] = b
    return tuple(images)


def brute_even_perms(m):
    """All even permutations of {0..m-1} as image tuples, by inversion parity."""
    out = []
    for p in itertools.permutations(range(m)):
        inv = sum(1 for i in range(m) for j in range(i + 1, m) if p[i] > p[j])
        if inv % 2 == 0:
            out.append(p)
    return out


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE = {}


def record_acceptance(number, description, passed, detail=""):
    ACCEPTANCE[number] = (description, passed, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        description, passed, detail = ACCEPTANCE[number]
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'} - {description}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)
