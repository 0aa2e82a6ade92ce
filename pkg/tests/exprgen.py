"""Random bundle expressions and byte strings for the parser tests."""

import random

NAMES = ["a", "b", "c", "x1", "Foo_2", "z"]


def random_bundle_text(rng, depth=0):
    """A random valid bundle expression, with random spacing."""
    n = rng.randint(1, 3 if depth < 3 else 1)
    terms = [_term(rng, depth) for _ in range(n)]
    return _ws(rng).join(t + _ws(rng) + "+" for t in terms[:-1]) + _ws(rng) + terms[-1]


def _ws(rng):
    return rng.choice(["", "", " ", "  ", "\t"])


def _term(rng, depth):
    f = _factor(rng, depth)
    if rng.random() < 0.3:
        return "%d%s*%s%s" % (rng.randint(1, 12), _ws(rng), _ws(rng), f)
    return f


def _factor(rng, depth):
    roll = rng.random()
    if depth < 3 and roll < 0.15:
        return "dual(%s)" % random_bundle_text(rng, depth + 1)
    if depth < 3 and roll < 0.25:
        return "(%s)" % random_bundle_text(rng, depth + 1)
    if roll < 0.45:
        return "1"
    return "U(%s%s%s)" % (_ws(rng), rng.choice(NAMES), _ws(rng))


GRAMMAR_BYTES = b"U()+*1dual 0123456789abz_\t"


def random_bytes(rng, max_len=40):
    n = rng.randrange(max_len)
    if rng.random() < 0.5:
        return bytes(rng.randrange(256) for _ in range(n))
    return bytes(rng.choice(GRAMMAR_BYTES) for _ in range(n))


def corpus(seed, count):
    rng = random.Random(seed)
    return [random_bundle_text(rng) for _ in range(count)]
