"""Small constructors shared by the tests."""

from __future__ import annotations

from fractions import Fraction

from segperiod.segcore import Multisegment, Segment
from segperiod.support import CuspidalLabel


def ms(label: CuspidalLabel, *intervals: tuple[int, int]) -> Multisegment:
    """Multisegment from lattice-index intervals of ``label``."""
    return Multisegment(
        Segment(label, Fraction(a * label.step), b - a + 1) for a, b in intervals
    )


def to_intervals(m: Multisegment) -> tuple[tuple[int, int], ...]:
    out = []
    for s in m:
        a = s.start / s.label.step
        assert a.denominator == 1
        out.append((int(a), int(a) + s.length - 1))
    return tuple(sorted(out))


def random_segment(rng, labels) -> Segment:
    lab = rng.choice(labels)
    base = Fraction(rng.choice([0, 0, 1, -1]), rng.choice([1, 2, 3]))
    start = base + lab.step * rng.randint(-4, 4)
    return Segment(lab, start, rng.randint(1, 3))


def random_form(rng, labels):
    """A random Z-form, L-form or flat product of them."""
    from segperiod.forms import Lform, Product, Zform

    def atom():
        kind = rng.choice([Zform, Lform])
        return kind(Multisegment(random_segment(rng, labels) for _ in range(rng.randint(1, 3))))

    n = rng.choice([0, 1, 1, 2, 3])
    if n == 0:
        return Product(())
    if n == 1:
        return atom()
    return Product(tuple(atom() for _ in range(n)))


def irreducible_forms(labels=("chi", "chi2", "mu", "mu2", "rho2")):
    """Hypothesis strategy: Z- or L-forms of weight 1..4 over fixture labels."""
    from hypothesis import strategies as st

    from segperiod.fixtures import fixture_registry
    from segperiod.forms import Lform, Zform

    reg = fixture_registry()
    labs = [reg[x] for x in labels]

    @st.composite
    def build(draw):
        kind = draw(st.sampled_from([Zform, Lform]))
        segs: list[Segment] = []
        budget = 4
        while budget > 0 and (not segs or draw(st.booleans())):
            lab = draw(st.sampled_from([x for x in labs if x.group_size <= budget]))
            length = draw(st.integers(1, budget // lab.group_size))
            offset = draw(st.sampled_from([Fraction(0), Fraction(1, 2)]))
            start = offset + lab.step * draw(st.integers(-3, 3))
            segs.append(Segment(lab, start, length))
            budget -= length * lab.group_size
        return kind(Multisegment(segs))

    return build()
