"""CNF handling, threshold checks, exhaustive search, and the width lift."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subcomp.errors import (
    LengthMismatch,
    NonUniformClause,
    ParseError,
    RepeatedVariable,
    TooManyVariables,
    WidthTooSmall,
)
from subcomp.sat import (
    Assignment,
    CnfFormula,
    brute_sat,
    check_threshold,
    emit_dimacs,
    lift,
    parse_dimacs,
)


@st.composite
def formulas(draw, max_n=6, max_m=4, widths=(3, 4)):
    k = draw(st.sampled_from(widths))
    n = draw(st.integers(min_value=k, max_value=max_n))
    m = draw(st.integers(min_value=0, max_value=max_m))
    clauses = []
    for _ in range(m):
        variables = draw(
            st.lists(
                st.integers(1, n), min_size=k, max_size=k, unique=True
            )
        )
        signs = draw(st.lists(st.booleans(), min_size=k, max_size=k))
        clauses.append([v if s else -v for v, s in zip(variables, signs)])
    return CnfFormula(n, clauses, k=k if not clauses else None)


def oracle_assignments(phi, r):
    """Every passing assignment via a plain truth-table walk."""
    out = []
    for bits in itertools.product([False, True], repeat=phi.n):
        ok = True
        for clause in phi.clauses:
            true = sum(1 for lit in clause if bits[abs(lit) - 1] == (lit > 0))
            if true < r:
                ok = False
                break
        if ok:
            out.append(bits)
    return out


class TestCnfFormula:
    def test_normalizes_literal_order(self):
        phi = CnfFormula(3, [[3, -1, 2]])
        assert phi.clauses == ((-1, 2, 3),)

    def test_width_inferred(self):
        phi = CnfFormula(4, [[1, 2, 3], [-2, 3, -4]])
        assert phi.k == 3 and phi.m == 2

    def test_rejects_nonuniform(self):
        with pytest.raises(NonUniformClause):
            CnfFormula(4, [[1, 2, 3], [1, 2]])

    def test_rejects_repeated_variable(self):
        with pytest.raises(RepeatedVariable):
            CnfFormula(3, [[1, -1, 2]])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            CnfFormula(2, [[1, 2, 3]])

    def test_empty_needs_explicit_width(self):
        with pytest.raises(ValueError):
            CnfFormula(3, [])
        assert CnfFormula(3, [], k=4).k == 4


class TestDimacs:
    def test_parse_basic(self):
        phi = parse_dimacs(b"c comment\np cnf 3 1\n1 -2 3 0\n")
        assert (phi.n, phi.m, phi.k) == (3, 1, 3)
        assert phi.clauses == ((1, -2, 3),)

    def test_clause_may_span_lines(self):
        phi = parse_dimacs(b"p cnf 4 1\n1 2\n3 4 0\n")
        assert phi.clauses == ((1, 2, 3, 4),)

    def test_repeated_variable_through_parse(self):
        with pytest.raises(RepeatedVariable):
            parse_dimacs(b"p cnf 2 1\n1 1 2 0\n")

    @pytest.mark.parametrize(
        "data,line",
        [
            (b"p cnf x 1\n1 0\n", 1),
            (b"1 2 0\n", 1),
            (b"p cnf 2 1\n1 two 0\n", 2),
            (b"p cnf 2 1\n1 3 0\n", 2),
            (b"p cnf 2 2\n1 2 0\n", 2),
            (b"p cnf 2 1\nc pad\n1 2\n", 3),
            (b"p cnf 2 1\np cnf 2 1\n1 2 0\n", 2),
        ],
    )
    def test_errors_carry_line_numbers(self, data, line):
        with pytest.raises(ParseError) as err:
            parse_dimacs(data)
        assert err.value.line == line

    def test_round_trip_normalizes(self):
        raw = b"p cnf 3 2\n3 -1 2 0\n-3 2 1 0\n"
        phi = parse_dimacs(raw)
        assert emit_dimacs(phi) == b"p cnf 3 2\n-1 2 3 0\n1 2 -3 0\n"
        assert parse_dimacs(emit_dimacs(phi)) == phi

    @given(formulas().filter(lambda phi: phi.m > 0))
    @settings(max_examples=150, deadline=None)
    def test_round_trip_identity(self, phi):
        # m = 0 is excluded: DIMACS carries no width for a clauseless formula
        assert parse_dimacs(emit_dimacs(phi)) == phi


class TestCheckThreshold:
    def test_threshold_zero_always_passes(self):
        phi = CnfFormula(3, [[1, 2, 3], [-1, -2, -3]])
        for bits in itertools.product([False, True], repeat=3):
            assert check_threshold(phi, Assignment(bits), 0)

    def test_counting(self):
        phi = CnfFormula(4, [[1, 2, 3, 4]])
        assert check_threshold(phi, Assignment([True] * 4), 2)
        assert not check_threshold(phi, Assignment([True, False, False, False]), 2)

    def test_length_mismatch(self):
        phi = CnfFormula(3, [[1, 2, 3]])
        with pytest.raises(LengthMismatch):
            check_threshold(phi, Assignment([True, False]), 1)

    def test_threshold_out_of_range(self):
        phi = CnfFormula(3, [[1, 2, 3]])
        with pytest.raises(ValueError):
            check_threshold(phi, Assignment([True] * 3), 4)

    @given(formulas(), st.data())
    @settings(max_examples=150, deadline=None)
    def test_monotone_in_threshold(self, phi, data):
        bits = data.draw(
            st.lists(st.booleans(), min_size=phi.n, max_size=phi.n)
        )
        a = Assignment(bits)
        passing = [r for r in range(phi.k + 1) if check_threshold(phi, a, r)]
        # a prefix of 0..k: once it fails it keeps failing
        assert passing == list(range(len(passing)))


class TestBruteSat:
    def test_contradiction_at_full_threshold(self):
        phi = CnfFormula(3, [[1, 2, 3], [-1, -2, -3]])
        assert brute_sat(phi, 3) is None

    def test_least_assignment(self):
        phi = CnfFormula(2, [[1, 2]])
        got = brute_sat(phi, 1)
        assert got == Assignment([False, True])

    def test_guard(self):
        with pytest.raises(TooManyVariables):
            brute_sat(CnfFormula(25, [], k=3), 1)

    @given(formulas(), st.integers(0, 4))
    @settings(max_examples=150, deadline=None)
    def test_agrees_with_truth_table(self, phi, r):
        r = min(r, phi.k)
        got = brute_sat(phi, r)
        expect = oracle_assignments(phi, r)
        if got is None:
            assert expect == []
        else:
            assert got.values == expect[0]


class TestLift:
    def test_single_clause(self):
        phi = CnfFormula(3, [[1, 2, 3]])
        psi = lift(phi)
        assert (psi.n, psi.m, psi.k) == (4, 1, 4)
        assert psi.clauses == ((1, 2, 3, 4),)

    def test_fresh_variable_per_clause(self):
        phi = CnfFormula(3, [[1, -2, 3], [-1, 2, -3]])
        psi = lift(phi)
        assert psi.n == 5
        assert psi.clauses == ((1, -2, 3, 4), (-1, 2, -3, 5))

    def test_empty_formula(self):
        phi = CnfFormula(3, [], k=3)
        psi = lift(phi)
        assert (psi.n, psi.m, psi.k) == (3, 0, 4)

    def test_width_guard(self):
        with pytest.raises(WidthTooSmall):
            lift(CnfFormula(2, [[1, -2]]))

    @given(formulas(max_n=4, max_m=3, widths=(3,)))
    @settings(max_examples=100, deadline=None)
    def test_threshold_equivalence(self, phi):
        psi = lift(phi)
        assert (brute_sat(phi, phi.k - 2) is None) == (brute_sat(psi, psi.k - 2) is None)

    @given(formulas(max_n=6, max_m=4))
    @settings(max_examples=100, deadline=None)
    def test_shape_preserved(self, phi):
        psi = lift(phi)
        assert psi.m == phi.m
        assert psi.n == phi.n + phi.m
        for old, new in zip(phi.clauses, psi.clauses):
            assert new[: phi.k] == old
