import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modrsa import modmath, oracle, rsa
from modrsa.errors import NotAUnitError
from modrsa.modmath import Modulus, Residue, ResidueClass, reduce

SQUARE_FREE = [2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 21, 22, 26, 33]


# --- reduction --------------------------------------------------------------

@given(st.integers(-(10**6), 10**6), st.integers(2, 100))
def test_reduction_soundness(x, n):
    r = reduce(x, n)
    assert 0 <= r.value < n
    assert (x - r.value) % n == 0


def test_reduction_soundness_exhaustive_small():
    for n in range(2, 31):
        for x in range(-500, 501):
            r = reduce(x, n)
            assert 0 <= r.value < n
            assert (x - r.value) % n == 0


@given(st.integers(-(10**9), 10**9), st.integers(-(10**9), 10**9), st.integers(2, 1000))
def test_representative_independence(x, y, n):
    rx, ry = reduce(x, n), reduce(y, n)
    assert modmath.add(rx, ry) == reduce(x + y, n)
    assert modmath.sub(rx, ry) == reduce(x - y, n)
    assert modmath.mul(rx, ry) == reduce(x * y, n)


# --- ring laws --------------------------------------------------------------

def test_ring_laws_desk_scale():
    # distributivity, commutativity, associativity on every triple mod 2..25
    for n in range(2, 26):
        m = Modulus(n)
        rs = [Residue(v, m) for v in range(n)]
        for a in rs:
            for b in rs:
                ab_sum = modmath.add(a, b)
                ab_prod = modmath.mul(a, b)
                assert ab_sum == modmath.add(b, a)
                assert ab_prod == modmath.mul(b, a)
                for c in rs:
                    assert modmath.mul(ab_sum, c) == modmath.add(modmath.mul(a, c), modmath.mul(b, c))
                    assert modmath.add(ab_sum, c) == modmath.add(a, modmath.add(b, c))
                    assert modmath.mul(ab_prod, c) == modmath.mul(a, modmath.mul(b, c))


# --- gcd and Bezout ---------------------------------------------------------

@given(st.integers(1, 50_000), st.integers(1, 50_000))
def test_bezout_certificate(x, y):
    cert, trace = modmath.extended_gcd(x, y)
    assert cert.a * x + cert.b * y == cert.g
    assert cert.g == math.gcd(x, y)
    assert x % cert.g == 0 and y % cert.g == 0
    # every trace row keeps the same linear identity for the traced inputs
    for row in trace.rows:
        assert row.a * trace.x + row.b * trace.y == row.n
    ns = [r.n for r in trace.rows]
    assert ns[-1] == 0
    assert all(ns[i] > ns[i + 1] for i in range(1, len(ns) - 1))


@given(st.integers(0, 10_000), st.integers(0, 10_000))
def test_gcd_matches_stdlib(x, y):
    if x == 0 and y == 0:
        return
    assert modmath.gcd(x, y) == math.gcd(x, y)


# --- units, classification, inverses ----------------------------------------

def test_classification_trichotomy():
    for n in range(2, 101):
        m = Modulus(n)
        counts = {ResidueClass.ZERO: 0, ResidueClass.UNIT: 0, ResidueClass.ZERO_DIVISOR: 0}
        for x in range(n):
            cls = modmath.classify(Residue(x, m))
            counts[cls] += 1
            assert (cls is ResidueClass.UNIT) == (math.gcd(x, n) == 1)
        assert counts[ResidueClass.ZERO] == 1
        assert sum(counts.values()) == n


def test_inverse_total_on_units_and_only_units():
    for n in range(2, 101):
        m = Modulus(n)
        for x in range(n):
            r = Residue(x, m)
            if math.gcd(x, n) == 1 and x != 0:
                assert modmath.mul(r, modmath.inverse(r)).value == 1
            else:
                with pytest.raises(NotAUnitError) as exc:
                    modmath.inverse(r)
                assert exc.value.gcd == (math.gcd(x, n) if x else n)


def test_zero_divisors_have_witnesses():
    for n in range(2, 101):
        m = Modulus(n)
        expected = oracle.zero_divisors(n)
        classified = {x for x in range(n) if modmath.classify(Residue(x, m)) is ResidueClass.ZERO_DIVISOR}
        assert classified == expected
        for x in classified:
            witness = next(y for y in range(1, n) if x * y % n == 0)
            assert x * witness % n == 0 and witness != 0
            # the shared factor d > 1 yields the witness n/d directly
            d = math.gcd(x, n)
            assert d > 1
            assert x * (n // d) % n == 0


# --- powers -----------------------------------------------------------------

@given(st.integers(2, 50).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n - 1))), st.integers(0, 40))
def test_pow_matches_naive(xn, e):
    n, x = xn
    r = Residue(x, Modulus(n))
    assert modmath.pow_mod(r, e) == oracle.naive_pow(r, e)


@given(st.integers(2, 2**31 - 1).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n - 1))), st.integers(0, 10_000))
@settings(max_examples=200)
def test_pow_matches_builtin(xn, e):
    n, x = xn
    assert modmath.pow_mod(Residue(x, Modulus(n)), e).value == pow(x, e, n)


def test_power_of_zero_exponent_is_always_one():
    for n in (2, 9, 221):
        m = Modulus(n)
        for x in range(n):
            assert modmath.pow_mod(Residue(x, m), 0).value == 1


def test_curious_fact_on_square_free_moduli():
    for n in SQUARE_FREE:
        phi = oracle.phi_brute(n)
        m = Modulus(n)
        for x in range(n):
            r = Residue(x, m)
            for k in range(4):
                assert modmath.pow_mod(r, 1 + k * phi).value == x


def test_curious_fact_fails_mod_eight():
    # 8 has a square factor; starting from 2 one never returns to 2
    m = Modulus(8)
    two = Residue(2, m)
    for p in range(2, 65):
        assert modmath.pow_mod(two, p).value != 2


# --- CRT --------------------------------------------------------------------

@pytest.mark.parametrize("p, q", [(3, 5), (2, 11), (13, 17)])
def test_crt_bijection_and_unit_rectangle(p, q):
    n = p * q
    m = Modulus(n)
    seen = set()
    for x in range(n):
        r = Residue(x, m)
        rp, rq = modmath.crt_decompose(r, p, q)
        assert rp.modulus.n == p and rq.modulus.n == q
        seen.add((rp.value, rq.value))
        is_unit = modmath.classify(r) is ResidueClass.UNIT
        assert is_unit == (rp.value != 0 and rq.value != 0)
    assert len(seen) == n
    assert seen == {(i, j) for i in range(p) for j in range(q)}


# --- critical exponents -------------------------------------------------------

@given(st.sampled_from(SQUARE_FREE), st.integers(1, 50), st.integers(1, 20))
def test_critical_exponent_progression(n, phi, count):
    exps = modmath.critical_exponents(n, phi, count)
    assert len(exps) == count
    assert exps[0] == 1
    assert all(b - a == phi for a, b in zip(exps, exps[1:]))


# --- rsa --------------------------------------------------------------------

TEXT = st.text(alphabet=rsa.ALPHABET, max_size=60)


@given(TEXT)
def test_codec_round_trip(text):
    assert rsa.decode_text(rsa.encode_text(text, 221)) == text


@given(TEXT)
def test_encrypt_decrypt_round_trip_text(text):
    pair = rsa.keygen(13, 17, 29)
    msg = rsa.encode_text(text, pair.n)
    assert rsa.decrypt(rsa.encrypt(msg, pair.public_key), pair.private_key) == msg


@given(st.lists(st.integers(0, 220), max_size=30))
def test_sign_verify_round_trip_numbers(values):
    pair = rsa.keygen(13, 17, 29)
    msg = rsa.NumberMessage(tuple(values), pair.n)
    assert rsa.verify(rsa.sign(msg, pair.private_key), pair.public_key) == msg


_SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]


@given(st.sampled_from(_SMALL_PRIMES), st.sampled_from(_SMALL_PRIMES), st.integers(2, 500))
def test_keygen_produces_inverse_exponents(p, q, e):
    if p == q:
        return
    phi = (p - 1) * (q - 1)
    if not 1 < e < phi or math.gcd(e, phi) != 1:
        return
    pair = rsa.keygen(p, q, e)
    assert pair.e * pair.f % pair.phi == 1
    assert 1 < pair.f < pair.phi
    assert pair.phi == oracle.phi_brute(pair.n)
