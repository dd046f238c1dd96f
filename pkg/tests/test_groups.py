from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import symq
from symq import errors

# Latin square with identity 0 and two-sided inverses that is not associative.
NONASSOC_LOOP = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]


def cyclic_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


# -- validate_group -------------------------------------------------------------


def test_validate_trivial_group():
    g = symq.validate_group([[0]])
    assert g.order == 1
    assert g.identity == 0
    assert g.inverse == (0,)


def test_validate_z3_derives_inverses():
    g = symq.validate_group(cyclic_table(3))
    assert g.identity == 0
    assert g.inverse == (0, 2, 1)


def test_mutated_z4_fires_row_permutation_check():
    # Overwriting product[1][1] duplicates an entry in row 1, so the first
    # check to fire (in the documented order) reports element 1 as
    # non-invertible.
    table = cyclic_table(4)
    table[1][1] = 1
    with pytest.raises(errors.NoInverse) as exc:
        symq.validate_group(table)
    assert exc.value.element == 1


def test_nonassociative_loop_reports_first_triple():
    with pytest.raises(errors.NotAssociative) as exc:
        symq.validate_group(NONASSOC_LOOP)
    assert exc.value.triple == (1, 1, 2)


def test_malformed_tables():
    with pytest.raises(errors.MalformedTable):
        symq.validate_group([[0, 1], [1]])
    with pytest.raises(errors.MalformedTable):
        symq.validate_group([[0, 2], [2, 0]])
    with pytest.raises(errors.MalformedTable):
        symq.validate_group([])


def test_no_identity():
    # Latin square with a left identity (row 0) but no two-sided identity.
    table = [[(2 * i + j) % 5 for j in range(5)] for i in range(5)]
    with pytest.raises(errors.NoIdentity):
        symq.validate_group(table)


# -- constructors ---------------------------------------------------------------


def test_build_group_cyclic4():
    g = symq.build_group("cyclic:4")
    assert g.order == 4
    assert g.product[1][3] == 0


def test_build_group_klein_every_element_self_inverse():
    g = symq.build_group("product:cyclic:2,cyclic:2")
    assert g.order == 4
    assert all(g.product[i][i] == 0 for i in range(4))


def test_build_group_dihedral3():
    g = symq.build_group("dihedral:3")
    symq.validate_group(g.product)  # full axiom check
    order_two = [i for i in range(6) if i != 0 and g.product[i][i] == 0]
    assert len(order_two) == 3


def test_quaternion_group_structure():
    g = symq.quaternion_group()
    symq.validate_group(g.product)
    # exactly one element of order two (the central one)
    order_two = [i for i in range(8) if i != 0 and g.product[i][i] == 0]
    assert len(order_two) == 1


def test_symmetric_group_3():
    g = symq.symmetric_group(3)
    assert g.order == 6
    symq.validate_group(g.product)


def test_alternating_group_4():
    g = symq.alternating_group(4)
    assert g.order == 12
    symq.validate_group(g.product)


def test_group_invariants_across_builtins(small_family):
    for label, g in small_family:
        validated = symq.validate_group(g.product)
        assert validated.identity == g.identity, label
        assert validated.inverse == g.inverse, label


def test_validate_s4_order_24():
    g = symq.symmetric_group(4)
    assert symq.validate_group(g.product).order == 24


# -- is_abelian / inversion -------------------------------------------------------


def test_is_abelian(z5, d3):
    assert symq.is_abelian(z5)
    assert not symq.is_abelian(d3)
    assert symq.is_abelian(symq.cyclic_group(1))


def test_noncommuting_pair_exists(d3):
    pairs = [
        (i, j)
        for i in range(6)
        for j in range(6)
        if d3.product[i][j] != d3.product[j][i]
    ]
    assert pairs


def test_inversion_automorphism(z4, klein, d3):
    assert symq.inversion_automorphism(z4).perm == (0, 3, 2, 1)
    assert symq.inversion_automorphism(klein).perm == (0, 1, 2, 3)
    with pytest.raises(errors.NotAbelian):
        symq.inversion_automorphism(d3)


# -- validate_automorphism --------------------------------------------------------


def test_validate_automorphism_doubling(z5):
    aut = symq.validate_automorphism(z5, [0, 2, 4, 1, 3])
    assert aut.perm == (0, 2, 4, 1, 3)


def test_validate_automorphism_rejects_non_identity_fixing(z4):
    with pytest.raises(errors.NotMultiplicative):
        symq.validate_automorphism(z4, [1, 0, 3, 2])


def test_validate_automorphism_identity_always_valid(d3):
    aut = symq.validate_automorphism(d3, list(range(6)))
    assert aut.is_identity()


def test_validate_automorphism_rejects_non_bijection(z4):
    with pytest.raises(errors.NotBijective):
        symq.validate_automorphism(z4, [0, 0, 1, 2])
    with pytest.raises(errors.NotBijective):
        symq.validate_automorphism(z4, [0, 1, 2])


# -- enumerate_automorphisms ------------------------------------------------------


def brute_force_automorphisms(g):
    """Independent oracle: filter all permutations by multiplicativity."""
    out = []
    for perm in permutations(range(g.order)):
        if all(
            perm[g.product[i][j]] == g.product[perm[i]][perm[j]]
            for i in range(g.order)
            for j in range(g.order)
        ):
            out.append(perm)
    return sorted(out)


@pytest.mark.parametrize(
    "spec,count",
    [("cyclic:4", 2), ("product:cyclic:2,cyclic:2", 6), ("cyclic:1", 1)],
)
def test_automorphism_counts(spec, count):
    g = symq.build_group(spec)
    auts = symq.enumerate_automorphisms(g)
    assert len(auts) == count
    assert [a.perm for a in auts] == brute_force_automorphisms(g)


@pytest.mark.parametrize(
    "builder,count",
    [
        (lambda: symq.cyclic_group(9), 6),
        (lambda: symq.cyclic_group(12), 4),
        (lambda: symq.direct_product([symq.cyclic_group(3)] * 2), 48),
        (lambda: symq.dihedral_group(6), 12),
        (lambda: symq.dihedral_group(5), 20),
    ],
)
def test_automorphism_counts_above_scan_threshold(builder, count):
    # these go through the generator-image backtracking; counts are the
    # classical values for the automorphism groups in question
    assert len(symq.enumerate_automorphisms(builder())) == count


def test_backtracking_matches_scan(small_family):
    from symq.budget import SearchBudget
    from symq.groups import _automorphisms_by_backtracking, _automorphisms_by_scan

    for label, g in small_family:
        by_track = sorted(_automorphisms_by_backtracking(g, SearchBudget()))
        by_scan = sorted(_automorphisms_by_scan(g, SearchBudget()))
        assert by_track == by_scan, label


def test_aut_group_closure(d3):
    auts = [a.perm for a in symq.enumerate_automorphisms(d3)]
    from symq.perms import compose, identity_perm, invert

    assert identity_perm(6) in auts
    for a in auts:
        assert invert(a) in auts
        for b in auts:
            assert compose(a, b) in auts


def test_budget_exhaustion():
    g = symq.direct_product([symq.cyclic_group(2)] * 3)
    with pytest.raises(errors.SearchBudgetExceeded):
        symq.enumerate_automorphisms(g, budget=5)


# -- centralizer ------------------------------------------------------------------


def test_centralizer_of_inversion(z4):
    inv = symq.inversion_automorphism(z4)
    cz = symq.centralizer_in_aut(z4, inv)
    assert len(cz) == 2  # whole automorphism group, which is abelian


def test_centralizer_of_identity_is_everything(klein):
    ident = symq.identity_automorphism(klein)
    assert len(symq.centralizer_in_aut(klein, ident)) == 6


def test_centralizer_matches_direct_filter(d3):
    from symq.perms import compose

    auts = symq.enumerate_automorphisms(d3)
    phi = auts[1]
    expected = [
        a.perm
        for a in auts
        if compose(a.perm, phi.perm) == compose(phi.perm, a.perm)
    ]
    got = [a.perm for a in symq.centralizer_in_aut(d3, phi)]
    assert got == expected
    assert phi.perm in got


# -- fixed_two_torsion --------------------------------------------------------------


def test_fixed_two_torsion_z4(z4):
    inv = symq.inversion_automorphism(z4)
    assert symq.fixed_two_torsion(z4, inv).members == (0, 2)


def test_fixed_two_torsion_z3(z3):
    inv = symq.inversion_automorphism(z3)
    assert symq.fixed_two_torsion(z3, inv).members == (0,)


def test_fixed_two_torsion_klein_identity(klein):
    ident = symq.identity_automorphism(klein)
    assert symq.fixed_two_torsion(klein, ident).members == (0, 1, 2, 3)


def test_fixed_set_stable_under_centralizer(small_family):
    for label, g in small_family:
        for phi in symq.enumerate_automorphisms(g):
            fixed = set(symq.fixed_two_torsion(g, phi).members)
            for psi in symq.centralizer_in_aut(g, phi):
                assert {psi.perm[r] for r in fixed} == fixed, label


# -- orbits_under -------------------------------------------------------------------


def test_orbits_no_maps():
    part = symq.orbits_under([], 3)
    assert part.orbits == ((0,), (1,), (2,))


def test_orbits_single_transposition():
    part = symq.orbits_under([[1, 0, 2]], 3)
    assert part.orbits == ((0, 1), (2,))
    assert part.orbit_id == (0, 0, 1)


def test_orbits_transvections_on_four_points():
    # bit-shear maps on two coordinates: 0 fixed, everything else one orbit
    e12 = [0, 1, 3, 2]
    e21 = [0, 3, 2, 1]
    part = symq.orbits_under([e12, e21], 4)
    assert part.orbits == ((0,), (1, 2, 3))


def test_orbits_rejects_non_permutation():
    with pytest.raises(errors.MalformedPermutation):
        symq.orbits_under([[0, 0, 1]], 3)


@given(
    st.lists(st.permutations(list(range(6))), max_size=3),
    st.permutations(list(range(6))),
)
@settings(max_examples=50, deadline=None)
def test_orbits_idempotent(maps, extra):
    part = symq.orbits_under(maps, 6)
    for orbit in part.orbits:
        # restricting the same maps to one orbit yields a single orbit
        relabel = {x: i for i, x in enumerate(orbit)}
        restricted = [
            [relabel[m[x]] for x in orbit]
            for m in maps
        ]
        sub = symq.orbits_under(restricted, len(orbit))
        assert sub.count == 1
