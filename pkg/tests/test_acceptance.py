"""Exit criteria, one test per criterion, each at its stated tolerance and time budget."""

import random
import time
from contextlib import contextmanager

from conftest import ACCEPTANCE
from oracles import brute_unit, chakravala, phi_by_iteration
from relclass import campaigns
from relclass.arith import discriminant_of, primes_upto, squarefree_upto
from relclass.cli import main
from relclass.forms import form_class_number
from relclass.orders import class_record, phi, relative_class_number
from relclass.pell import (coords_mod, fundamental_unit, integral_coords_mod, next_coords, unit_power)


@contextmanager
def criterion(num, title):
    detail = {"text": ""}
    t0 = time.perf_counter()
    try:
        yield detail
    except BaseException:
        ACCEPTANCE.append((num, title, False, f"{detail['text']} ({time.perf_counter() - t0:.3f}s)"))
        raise
    ACCEPTANCE.append((num, title, True, f"{detail['text']} ({time.perf_counter() - t0:.3f}s)"))


def test_c1_unit_46(capsys):
    with criterion(1, "fundamental unit of Q(sqrt 46)") as out:
        fundamental_unit.cache_clear()
        t0 = time.perf_counter()
        u = fundamental_unit(46)
        elapsed = time.perf_counter() - t0
        assert (u.x, u.y, u.c, u.norm) == (24335, 3588, 1, 1)
        assert elapsed < 1e-3, elapsed
        assert main(["unit", "46"]) == 0
        assert capsys.readouterr().out.strip() == "x=24335 y=3588 c=1 norm=+1"
        out["text"] = f"{u} in {elapsed * 1e6:.0f}us"


def test_c2_paper_relative_class_numbers():
    with criterion(2, "h_184(2) = 2 and h_184(23) = 23") as out:
        for f, expected in ((2, 2), (23, 23)):
            t0 = time.perf_counter()
            h = relative_class_number(184, f)
            elapsed = time.perf_counter() - t0
            assert h == expected
            assert elapsed < 1e-3, elapsed
        out["text"] = "exact"


def test_c3_theorem_sweep():
    with criterion(3, "h_184(f) > 1 for primes f <= 10^4 and all f <= 10^3") as out:
        res = campaigns.verify_theorem_1_1(10**4, composite_max=10**3, jobs=1)
        assert res.passed, res.failures[:5]
        primes = [it for it in res.items if it["type"] == "prime"]
        assert len(primes) == len(primes_upto(10**4))
        assert all(it["h"] >= 2 for it in primes)
        assert all(it["half_power"] for it in primes if 46 % it["f"])
        # every f <= 10^3, prime or not, directly
        assert all(relative_class_number(184, f) > 1 for f in range(2, 10**3 + 1))
        assert res.wall_time < 60
        out["text"] = res.summary()


def test_c4_small_m_witnesses():
    with criterion(4, "witness prime with h = 1 for every squarefree 1 < m <= 45") as out:
        res = campaigns.sweep_theorem_3_1(45, jobs=1)
        assert res.passed
        ms = [m for m in squarefree_upto(45) if m > 1]
        assert [it["m"] for it in res.items] == ms
        assert all(it["status"] == "witness" and it["h"] == 1 for it in res.items)
        assert res.wall_time < 5
        out["text"] = res.summary()


def test_c5_stephens_prefix():
    with criterion(5, "m | y census up to 60000") as out:
        res = campaigns.scan_m_divides_y(60000, jobs=campaigns.default_jobs())
        assert {it["m"] for it in res.items} == {46, 430, 1817, 58254}
        assert res.wall_time < 600
        out["text"] = res.summary()


def test_c6_cohn_tower():
    with criterion(6, "H_5(5^n) = 1 for n <= 5; H(125) = H(3125) = 1") as out:
        res = campaigns.cohn_tower(5)
        assert res.passed
        assert [it["H_rel"] for it in res.items] == [1] * 5
        assert form_class_number(125) == form_class_number(3125) == 1
        assert res.wall_time < 30
        out["text"] = res.summary()


def test_c7_forms_vs_units():
    with criterion(7, "H(d0 f^2)/H(d0) = h_plus relative for d0 f^2 <= 20000") as out:
        res = campaigns.cross_check_forms(20000, jobs=campaigns.default_jobs())
        assert res.passed, res.failures[:5]
        for it in res.items:
            assert it["H_forms"] == it["h_plus_rel"]
            assert not (it["norm_eps_d0"] == 1 and it["norm_eps_d0f2"] == -1)
        assert res.wall_time < 300
        out["text"] = res.summary()


def test_c8_aac_mordell():
    with criterion(8, "no AAC/Mordell counterexample for p <= 10^4") as out:
        res = campaigns.scan_aac(10**4, jobs=1)
        assert res.counts["aac_counterexamples"] == 0
        assert res.counts["mordell_counterexamples"] == 0
        assert res.wall_time < 120
        out["text"] = res.summary()


def test_c9_property_suites():
    with criterion(9, "Pell identity, mod-f agreement, unit minimality, phi search") as out:
        t0 = time.perf_counter()
        rng = random.Random(9)
        sqf = [m for m in squarefree_upto(200) if m > 1]

        for m in rng.sample(sqf, 30):
            u = fundamental_unit(m)
            pc = unit_power(u, 1)
            for n in range(1, 51):
                assert pc.a**2 - m * pc.b**2 == u.norm**n * u.c**2
                pc = next_coords(u, pc)

        for _ in range(200):
            m, n, f = rng.choice(sqf), rng.randint(1, 1000), rng.randint(2, 1000)
            u = fundamental_unit(m)
            exact = unit_power(u, n)
            got = integral_coords_mod(u, n, f) if (u.c == 2 and f % 2 == 0) else coords_mod(u, n, f)
            assert got == (exact.a % f, exact.b % f)

        for m in sqf:
            u = fundamental_unit(m)
            brute = brute_unit(m, y_max=min(u.y, 20000))
            if u.y <= 20000:
                assert brute == (u.x, u.y, u.c, u.norm)
            else:
                assert brute is None
                k = 1 if u.norm == 1 else 2
                a, b = unit_power(u, k).a, unit_power(u, k).b
                if u.c == 2:
                    assert a % 2 == 0 and b % 2 == 0
                    a, b = a // 2, b // 2
                assert (a, b) == chakravala(m)

        for m in [m for m in sqf if m <= 60]:
            u = fundamental_unit(m)
            d0 = discriminant_of(m)
            for f in range(1, 51):
                assert phi(d0, f) == phi_by_iteration(m, f, u.x, u.y, u.c)

        elapsed = time.perf_counter() - t0
        assert elapsed < 60
        out["text"] = "all exact"
