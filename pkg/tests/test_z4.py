import numpy as np
import pytest

from hychroma.errors import (
    ConstructionError,
    GuardError,
    IntegrityError,
    ParseError,
    UsageError,
)
from hychroma.gf2 import BitVector, hamming_distance
from hychroma.z4 import (
    Z4Polynomial,
    Z4Vector,
    alpha_map,
    format_z4_code_file,
    gray_inverse,
    gray_map,
    hensel_lift,
    kerdock_code,
    lee_distance,
    lee_weight,
    min_lee_weight,
    octacode,
    parse_z4_code_file,
    poly_divmod,
    poly_mul,
    preparata_code,
    z4_code,
    z4_codewords,
    z4_dual,
    z4_from_bits,
    z4_inner_product,
)


def vec(*entries):
    return Z4Vector.from_entries(entries)


def test_vector_round_trip():
    v = vec(1, 3, 0, 2)
    assert v.entries() == (1, 3, 0, 2)
    assert str(v) == "1302"
    assert Z4Vector.from_string("1302") == v


def test_vector_arithmetic():
    assert (vec(1, 2) + vec(3, 3)).entries() == (0, 1)
    assert (-vec(0, 1, 2, 3)).entries() == (0, 3, 2, 1)
    assert vec(1, 2).scale(2).entries() == (2, 0)
    assert (vec(1, 0) - vec(3, 2)).entries() == (2, 2)


def test_lee_weight_examples():
    assert lee_weight(vec(0, 0, 0)) == 0
    assert lee_weight(vec(1, 2, 3, 0)) == 4
    assert lee_weight(vec(2, 2, 2, 2)) == 8


def test_lee_distance_examples():
    assert lee_distance(vec(1), vec(1)) == 0
    assert lee_distance(vec(0), vec(3)) == 1
    assert lee_distance(vec(1, 0), vec(3, 2)) == 4
    with pytest.raises(UsageError):
        lee_distance(vec(1), vec(1, 1))


def test_gray_map_examples():
    assert str(gray_map(vec(2))) == "11"
    assert str(gray_map(vec(0, 0))) == "0000"
    assert str(gray_map(vec(1, 3))) == "0110"


def test_gray_inverse_examples():
    assert gray_inverse(BitVector.from_string("11")).entries() == (2,)
    assert gray_inverse(BitVector.from_string("0000")).entries() == (0, 0)
    assert gray_inverse(BitVector.from_string("1001")).entries() == (3, 1)
    with pytest.raises(UsageError):
        gray_inverse(BitVector.from_string("101"))


def test_gray_round_trip_exhaustive():
    for n in (1, 2, 3):
        for packed in range(1 << (2 * n)):
            v = Z4Vector(n, packed)
            assert gray_inverse(gray_map(v)) == v


def test_gray_isometry_exhaustive_small():
    for n in (1, 2):
        for p in range(1 << (2 * n)):
            for q in range(1 << (2 * n)):
                x, y = Z4Vector(n, p), Z4Vector(n, q)
                assert lee_distance(x, y) == hamming_distance(gray_map(x), gray_map(y))


def test_alpha_map_examples():
    assert str(alpha_map(vec(0, 2))) == "00"
    assert str(alpha_map(vec(1, 3))) == "11"
    assert str(alpha_map(vec(0, 1, 2, 3))) == "0101"


def test_gray_addition_identity_exhaustive_small():
    for n in (1, 2):
        for p in range(1 << (2 * n)):
            for q in range(1 << (2 * n)):
                x, y = Z4Vector(n, p), Z4Vector(n, q)
                left = gray_map(x + y)
                ax, ay = alpha_map(x), alpha_map(y)
                carry = z4_from_bits(BitVector(n, ax.bits & ay.bits)).scale(2)
                right = gray_map(x) ^ gray_map(y) ^ gray_map(carry)
                assert left == right


def test_inner_product():
    assert z4_inner_product(vec(1, 2, 3), vec(1, 1, 1)) == (1 + 2 + 3) % 4
    assert z4_inner_product(vec(2), vec(2)) == 0
    assert z4_inner_product(vec(3, 3), vec(3, 0)) == 1


def test_poly_mul_divmod():
    a = Z4Polynomial((3, 0, 1))      # x^2 + 3
    b = Z4Polynomial((1, 1))         # x + 1
    prod = poly_mul(a, b)
    quot, rem = poly_divmod(prod, b)
    assert quot == a
    assert rem.is_zero()
    _, rem2 = poly_divmod(Z4Polynomial((1, 0, 1)), Z4Polynomial((1, 1)))
    assert not rem2.is_zero()
    with pytest.raises(UsageError):
        poly_divmod(a, Z4Polynomial((1, 2)))


def test_hensel_lift_degree_one_fixed_point():
    lifted = hensel_lift(Z4Polynomial((3, 1)))  # x - 1
    assert lifted == Z4Polynomial((3, 1))


def test_hensel_lift_trinomials():
    lifted = hensel_lift(Z4Polynomial((1, 1, 0, 1)))
    assert lifted.coefficients == (3, 1, 2, 1)  # x^3 + 2x^2 + x + 3
    lifted2 = hensel_lift(Z4Polynomial((1, 0, 1, 1)))
    assert lifted2.coefficients == (3, 2, 3, 1)  # x^3 + 3x^2 + 2x + 3
    x7m1 = Z4Polynomial((3,) + (0,) * 6 + (1,))
    for h in (lifted, lifted2):
        _, rem = poly_divmod(x7m1, h)
        assert rem.is_zero()


def test_hensel_lift_rejects_non_squarefree():
    with pytest.raises(ConstructionError):
        hensel_lift(Z4Polynomial((1, 0, 1)))  # x^2 + 1 = (x+1)^2 mod 2
    with pytest.raises(ConstructionError):
        hensel_lift(Z4Polynomial((2,)))


def test_standard_form_mixed_orders():
    code = z4_code(2, [(1, 1), (2, 0)])
    assert (code.k1, code.k2) == (1, 1)
    words = z4_codewords(code)
    assert len(set(int(w) for w in words)) == 8


def test_standard_form_order_two_row():
    code = z4_code(2, [(2, 2)])
    assert (code.k1, code.k2) == (0, 1)
    assert len(z4_codewords(code)) == 2


def test_standard_form_identity():
    code = z4_code(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert (code.k1, code.k2) == (3, 0)


def test_standard_form_redundant_rows():
    code = z4_code(2, [(1, 1), (2, 2), (3, 3)])
    assert (code.k1, code.k2) == (1, 0)


def test_codewords_match_brute_force_span():
    rows = [(1, 2, 3), (0, 2, 2)]
    code = z4_code(3, rows)
    words = set(int(w) for w in z4_codewords(code))
    brute = set()
    for s in range(4):
        for t in range(4):
            v = Z4Vector.from_entries(rows[0]).scale(s) + \
                Z4Vector.from_entries(rows[1]).scale(t)
            brute.add(v.packed)
    assert words == brute
    assert len(words) == code.size()


def test_min_lee_weight_order_two_singleton():
    assert min_lee_weight(z4_code(1, [(2,)])) == 2


def test_min_lee_weight_guard():
    big = z4_code(30, [[1 if i == j else 0 for i in range(30)] for j in range(30)])
    with pytest.raises(GuardError):
        min_lee_weight(big)


def test_octacode_facts():
    code = octacode()
    assert code.length == 8
    assert (code.k1, code.k2) == (4, 0)
    assert code.size() == 256
    assert min_lee_weight(code) == 6


def test_octacode_self_dual():
    code = octacode()
    dual = z4_dual(code)
    assert set(int(w) for w in z4_codewords(code)) == \
        set(int(w) for w in z4_codewords(dual))


def test_dual_of_full_space_is_zero():
    full = z4_code(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    dual = z4_dual(full)
    assert (dual.k1, dual.k2) == (0, 0)


def test_dual_of_two_generator():
    code = z4_code(1, [(2,)])
    dual = z4_dual(code)
    assert (dual.k1, dual.k2) == (0, 1)
    assert set(int(w) for w in z4_codewords(dual)) == {0, 2}


def test_kerdock_r5():
    code = kerdock_code(5)
    assert code.length == 32
    assert (code.k1, code.k2) == (6, 0)
    words = z4_codewords(code)
    assert len(np.unique(words)) == 4096
    assert min_lee_weight(code) == 28


def test_kerdock_rejects_bad_r():
    with pytest.raises(UsageError):
        kerdock_code(4)
    with pytest.raises(UsageError):
        kerdock_code(9)


def test_preparata_r3_facts():
    code = preparata_code(3)
    assert code.length == 8
    assert (code.k1, code.k2) == (4, 0)
    assert min_lee_weight(code) == 6
    images = [gray_map(Z4Vector(8, int(w))) for w in z4_codewords(code)]
    assert len(images) == 256
    assert all(v.length == 16 for v in images)
    distribution = {}
    for v in images:
        distribution[v.weight()] = distribution.get(v.weight(), 0) + 1
    assert distribution == {0: 1, 6: 112, 8: 30, 10: 112, 16: 1}


def test_kerdock_preparata_mutual_duals():
    kerdock = kerdock_code(3)
    preparata = preparata_code(3)
    for g in kerdock.generator_vectors():
        for h in preparata.generator_vectors():
            assert z4_inner_product(g, h) == 0
    assert kerdock.size() * preparata.size() == 4 ** 8


def test_kerdock_r7_constructs():
    code = kerdock_code(7)
    assert code.length == 128
    assert (code.k1, code.k2) == (8, 0)
    dual = z4_dual(code)
    assert dual.k1 == 2 ** 7 - 7 - 1


def test_gray_length_guard():
    with pytest.raises(UsageError):
        gray_map(Z4Vector(33, 0))


def test_z4_file_round_trip():
    code = octacode()
    text = format_z4_code_file(code)
    parsed = parse_z4_code_file(text)
    assert parsed.generators == code.generators
    assert text.splitlines()[0] == "z4code n=8 k1=4 k2=0"


def test_z4_file_parse_errors():
    with pytest.raises(ParseError):
        parse_z4_code_file("")
    with pytest.raises(ParseError):
        parse_z4_code_file("z4code n=2 k1=1\n11\n")
    with pytest.raises(ParseError):
        parse_z4_code_file("z4code n=2 k1=1 k2=0\n")
    with pytest.raises(ParseError):
        parse_z4_code_file("z4code n=2 k1=1 k2=0\n41\n")
    with pytest.raises(ParseError):
        parse_z4_code_file("z4code n=2 k1=2 k2=0\n11\n22\n")


def test_gray_isometry_random_large():
    rng = np.random.default_rng(5)
    for _ in range(2000):
        n = int(rng.integers(1, 33))
        p = int(rng.integers(0, 1 << 30)) | (int(rng.integers(0, 1 << 34)) << 30)
        q = int(rng.integers(0, 1 << 30)) | (int(rng.integers(0, 1 << 34)) << 30)
        mask = (1 << (2 * n)) - 1
        x, y = Z4Vector(n, p & mask), Z4Vector(n, q & mask)
        assert lee_weight(x) == gray_map(x).weight()
        assert lee_distance(x, y) == hamming_distance(gray_map(x), gray_map(y))
