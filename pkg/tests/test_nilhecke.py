import random

from qseidel.affine import (
    affine_simple_ext,
    central_dynkin_action,
    central_elements,
    from_word_affine,
    is_waff_minus,
)
from qseidel.nilhecke import (
    act_on_xi,
    central_act_poly,
    divdiff,
    embed_group,
    nh_add,
    nh_basis,
    nh_mod_Jtilde,
    nh_mul,
    nh_one,
    nh_scalar,
    nh_sub,
    nh_zero,
    reflect_poly,
    scalar_root,
    weyl_act_poly,
    xi_unit,
    XiVector,
)
from qseidel.poly import SPoly
from qseidel.rootsys import build_root_system
from qseidel.weyl import from_word


def _aff_words(rs, max_len):
    out = [()]
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for word in frontier:
            for i in range(rs.rank + 1):
                nxt.append(word + (i,))
        frontier = nxt
        out.extend(nxt)
    return out


def _short_elements(rs, max_len):
    seen = {}
    for word in _aff_words(rs, max_len):
        try:
            x = from_word_affine(rs, word)
        except ValueError:
            continue
        seen.setdefault(x, word)
    return list(seen)


def test_divdiff_basics():
    rs = build_root_system("A2")
    x1 = SPoly.var(2, 1)
    # A_i kills constants and satisfies A_i(alpha_i) = 2 - <...> pairing
    for i in range(rs.rank + 1):
        assert divdiff(rs, i, SPoly.one(2)).is_zero()
        a = scalar_root(rs, i)
        assert divdiff(rs, i, a) == SPoly.const(2, 2)
    # twisted Leibniz: A_i(fg) = A_i(f) g + s_i(f) A_i(g)
    rng = random.Random(53)
    for _ in range(30):
        f = SPoly(2, {(rng.randint(0, 2), rng.randint(0, 2)):
                      rng.randint(-3, 3)})
        g = SPoly(2, {(rng.randint(0, 2), rng.randint(0, 2)):
                      rng.randint(-3, 3)})
        for i in range(rs.rank + 1):
            lhs = divdiff(rs, i, f * g)
            rhs = divdiff(rs, i, f) * g + reflect_poly(rs, i, f) * divdiff(
                rs, i, g)
            assert lhs == rhs
    assert divdiff(rs, 1, x1 * x1) == 2 * x1 - scalar_root(rs, 1)


def test_divdiff_squares_to_zero():
    for name in ("A2", "B2"):
        rs = build_root_system(name)
        rng = random.Random(59)
        for _ in range(20):
            f = SPoly(rs.rank, {tuple(rng.randint(0, 2)
                                      for _ in range(rs.rank)):
                                rng.randint(-3, 3)})
            for i in range(rs.rank + 1):
                assert divdiff(rs, i, divdiff(rs, i, f)).is_zero()


def test_reflect_poly_is_involution():
    rs = build_root_system("B2")
    rng = random.Random(61)
    for _ in range(20):
        f = SPoly(2, {(rng.randint(0, 2), rng.randint(0, 2)):
                      rng.randint(-3, 3)})
        for i in range(rs.rank + 1):
            assert reflect_poly(rs, i, reflect_poly(rs, i, f)) == f


def test_weyl_act_poly_factors_through_words():
    rs = build_root_system("A2")
    w = from_word(rs, (1, 2))
    f = SPoly.var(2, 1) * SPoly.var(2, 2) + SPoly.var(2, 1)
    by_word = reflect_poly(rs, 1, reflect_poly(rs, 2, f))
    assert weyl_act_poly(w, f) == by_word


def test_embedded_reflections_square_to_one():
    for name in ("A1", "A2"):
        rs = build_root_system(name)
        for i in range(rs.rank + 1):
            s = embed_group(affine_simple_ext(rs, i))
            assert nh_mul(s, s) == nh_one(rs)


def test_braid_relation_a2():
    rs = build_root_system("A2")
    for i, j in ((1, 2), (0, 1), (0, 2)):
        si = embed_group(affine_simple_ext(rs, i))
        sj = embed_group(affine_simple_ext(rs, j))
        lhs = nh_mul(si, nh_mul(sj, si))
        rhs = nh_mul(sj, nh_mul(si, sj))
        assert lhs == rhs


def test_basis_multiplication_matches_word_concatenation():
    # A_x A_y = A_{xy} when lengths add, else 0
    rs = build_root_system("A2")
    elems = _short_elements(rs, 3)
    from qseidel.affine import aff_length, aff_mul
    for x in elems:
        for y in elems:
            prod = nh_mul(nh_basis(x), nh_basis(y))
            z = aff_mul(x, y)
            if aff_length(z) == aff_length(x) + aff_length(y):
                assert prod == nh_basis(z)
            else:
                assert prod == nh_zero(rs)


def test_central_twist_in_products():
    # tau A_{s_i} tau^-1 = A_{s_{tau(i)}} with tau(i) the diagram rotation
    from qseidel.affine import aff_inv
    rs = build_root_system("A2")
    zs = [z for z in central_elements(rs) if z.node is not None]
    for z in zs:
        for i in range(rs.rank + 1):
            lhs = nh_mul(
                nh_mul(embed_group(z.to_ext()),
                       nh_basis(affine_simple_ext(rs, i))),
                embed_group(aff_inv(z.to_ext())))
            j = central_dynkin_action(z, i)
            assert lhs == nh_basis(affine_simple_ext(rs, j))


def test_scalar_commutation_rule():
    # A_i f = A_i(f) + s_i(f) A_i as operators
    rs = build_root_system("A2")
    rng = random.Random(67)
    for _ in range(15):
        f = SPoly(2, {(rng.randint(0, 2), rng.randint(0, 2)):
                      rng.randint(-2, 2)})
        for i in range(rs.rank + 1):
            ai = nh_basis(affine_simple_ext(rs, i))
            lhs = nh_mul(ai, nh_scalar(rs, f))
            rhs = nh_add(nh_scalar(rs, divdiff(rs, i, f)),
                         nh_mul(nh_scalar(rs, reflect_poly(rs, i, f)), ai))
            assert lhs == rhs


def test_central_act_poly_identity_for_trivial():
    rs = build_root_system("A2")
    triv = next(z for z in central_elements(rs) if z.node is None)
    f = SPoly.var(2, 1) + 2 * SPoly.var(2, 2)
    assert central_act_poly(triv, f) == f


def test_xi_unit_action():
    # acting by x on the unit vector reads off the xi_x coefficient family
    rs = build_root_system("A1")
    s0 = affine_simple_ext(rs, 0)
    s1 = affine_simple_ext(rs, 1)
    v = act_on_xi(s1, xi_unit(rs))
    assert all(is_waff_minus(x) for x in v.terms)
    from qseidel.affine import aff_mul
    v2 = act_on_xi(s0, act_on_xi(s1, xi_unit(rs)))
    direct = act_on_xi(aff_mul(s0, s1), xi_unit(rs))
    assert v2.terms == direct.terms


def test_module_action_matches_engine():
    # A_x . xi_y via the coefficient rule equals the engine product mod the
    # translation ideal
    rs = build_root_system("A2")
    rng = random.Random(71)
    elems = _short_elements(rs, 3)
    minus = [x for x in elems if is_waff_minus(x)]
    checked = 0
    for _ in range(40):
        x = rng.choice(elems)
        y = rng.choice(minus)
        via_engine = nh_mod_Jtilde(nh_mul(nh_basis(x), nh_basis(y)))
        via_rule = act_on_xi(x, XiVector(rs, {y: SPoly.one(rs.rank)}))
        engine_terms = {k[1]: v for k, v in via_engine.terms.items()}
        assert engine_terms == via_rule.terms
        checked += 1
    assert checked == 40


def test_nh_linear_structure():
    rs = build_root_system("A1")
    a = nh_basis(affine_simple_ext(rs, 0))
    b = nh_basis(affine_simple_ext(rs, 1))
    assert nh_sub(nh_add(a, b), b) == a
    assert nh_add(a, nh_zero(rs)) == a
    assert nh_mul(nh_one(rs), a) == a
    assert nh_mul(a, nh_one(rs)) == a
