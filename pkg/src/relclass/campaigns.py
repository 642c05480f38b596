"""Batch verifications over conductors, fields and primes.

Every campaign splits its index set into chunks, evaluates them independently
(optionally in worker processes) and merges results in index order, so the
item list does not depend on the number of jobs.
"""

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .arith import (discriminant_of, is_fundamental_discriminant, is_prime, prime_divisors,
                    primes_upto, squarefree_upto)
from .errors import InvariantViolation
from .forms import form_class_number, relative_form_class_number
from .orders import class_record, half_power_membership, phi, relative_class_number
from .pell import _pqa, fundamental_unit, unit_y_mod

D0 = 184
M46 = 46
STEPHENS_FIELDS = (46, 430, 1817, 58254, 209991, 1752299, 3124318, 4099215)
FORM_SIZE_CUTOFF = 10**6


@dataclass
class CampaignResult:
    name: str
    params: dict
    items: list[dict] = field(default_factory=list)
    passed: bool = True
    counts: dict = field(default_factory=dict)
    wall_time: float = 0.0
    failures: list[str] = field(default_factory=list)

    def fail(self, msg: str) -> None:
        self.passed = False
        self.failures.append(msg)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        counts = " ".join(f"{k}={v}" for k, v in self.counts.items())
        return f"{self.name}: {status} {counts} ({self.wall_time:.2f}s)"


def default_jobs() -> int:
    env = os.environ.get("RELCLASS_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _chunks(seq, n):
    size = max(1, -(-len(seq) // n))
    return [seq[i:i + size] for i in range(0, len(seq), size)]


def _pmap(fn, seq, jobs):
    """[fn(chunk) for chunk in chunks] flattened, in input order."""
    seq = list(seq)
    if jobs <= 1 or len(seq) < 2:
        return fn(seq)
    chunks = _chunks(seq, 4 * jobs)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(fn, chunks))
    return [x for part in parts for x in part]


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.wall_time = time.perf_counter() - t0
        return res
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


# ---------------------------------------------------------------- m = 46

def _prime_items(fs):
    out = []
    for f in fs:
        rec = class_record(D0, f)
        if M46 % f == 0:
            mech, half = "unit-in-order", None
        else:
            mech, half = "half-power", half_power_membership(M46, f)
        out.append({"f": f, "type": "prime", "psi": rec.psi, "phi": rec.phi,
                    "h": rec.h_rel, "h_plus": rec.h_plus_rel, "H": rec.H_rel,
                    "mechanism": mech, "half_power": half})
    return out


def _composite_items(fs):
    out = []
    for f in fs:
        h = relative_class_number(D0, f)
        p = prime_divisors(f)[0]
        hp = relative_class_number(D0, p)
        out.append({"f": f, "type": "composite", "h": h, "via_prime": p, "h_prime": hp,
                    "divisible": h % hp == 0})
    return out


@_timed
def verify_theorem_1_1(f_max: int = 10**4, composite_max: int = 10**3, jobs: int = 1) -> CampaignResult:
    """Every conductor f > 1 of Q(sqrt(46)) has relative class number > 1, up to f_max."""
    if f_max < 2:
        raise ValueError("f_max must be >= 2")
    res = CampaignResult("verify46", {"f_max": f_max, "composite_max": composite_max})
    primes = primes_upto(f_max)
    prime_items = _pmap(_prime_items, primes, jobs)
    for it in prime_items:
        f = it["f"]
        if it["h"] < 2:
            res.fail(f"h_184({f}) = {it['h']}")
        if it["half_power"] is False:
            res.fail(f"eps^(psi/2) not in O_{f}")
        if not it["h"] == it["h_plus"] == it["H"]:
            res.fail(f"relative class numbers differ at f={f}")
        if f in (2, 23) and it["h"] != f:
            res.fail(f"h_184({f}) = {it['h']}, expected {f}")
    composites = [f for f in range(4, min(f_max, composite_max) + 1) if not is_prime(f)]
    comp_items = _pmap(_composite_items, composites, jobs)
    for it in comp_items:
        if it["h"] < 2 or not it["divisible"]:
            res.fail(f"composite f={it['f']}: h={it['h']}, h({it['via_prime']})={it['h_prime']}")
    res.items = prime_items + comp_items
    res.counts = {"primes": len(primes), "composites": len(composites),
                  "min_h": min(it["h"] for it in res.items), "failures": len(res.failures)}
    return res


# ---------------------------------------------------------------- m | y census

def _mdy_exact(ms):
    return [(m, _pqa(m)[1] % m) for m in ms]


def _mdy_modular(ms):
    return [(m, unit_y_mod(m, m)[0]) for m in ms]


@_timed
def scan_m_divides_y(m_max: int = 60000, jobs: int = 1, modular: bool = False) -> CampaignResult:
    """Squarefree m <= m_max whose fundamental unit has m | y."""
    if m_max < 2:
        raise ValueError("m_max must be >= 2")
    res = CampaignResult("scan-mdy", {"m_max": m_max, "method": "modular" if modular else "exact"})
    ms = [m for m in squarefree_upto(m_max) if m > 1]
    rows = _pmap(_mdy_modular if modular else _mdy_exact, ms, jobs)
    res.items = [{"m": m, "y_mod_m": r, "c": 2 if m % 4 == 1 else 1} for m, r in rows if r == 0]
    res.counts = {"scanned": len(ms), "hits": len(res.items)}
    return res


# ---------------------------------------------------------------- AAC / Mordell

def _aac_items(ps):
    out = []
    for p in ps:
        y_mod, norm = unit_y_mod(p, p)
        out.append({"p": p, "p_mod_4": p % 4, "y_mod_p": y_mod, "norm": norm,
                    "counterexample": y_mod == 0})
    return out


@_timed
def scan_aac(p_max: int = 10**4, jobs: int = 1) -> CampaignResult:
    """For odd primes p <= p_max, does p divide y(eps_p)?  Counterexamples are reported."""
    if p_max < 5:
        raise ValueError("p_max must be >= 5")
    res = CampaignResult("aac", {"p_max": p_max})
    res.items = _pmap(_aac_items, [p for p in primes_upto(p_max) if p > 2], jobs)
    bad1 = [it["p"] for it in res.items if it["counterexample"] and it["p_mod_4"] == 1]
    bad3 = [it["p"] for it in res.items if it["counterexample"] and it["p_mod_4"] == 3]
    res.counts = {"primes_1_mod_4": sum(it["p_mod_4"] == 1 for it in res.items),
                  "primes_3_mod_4": sum(it["p_mod_4"] == 3 for it in res.items),
                  "aac_counterexamples": len(bad1), "mordell_counterexamples": len(bad3)}
    return res


# ---------------------------------------------------------------- Cohn's tower

@_timed
def cohn_tower(n_max: int = 5) -> CampaignResult:
    """H_5(5^n) = 1, and H(5^(2n+1)) = 1 by direct enumeration while it is small enough."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    res = CampaignResult("cohn", {"n_max": n_max})
    if form_class_number(5) != 1:
        res.fail(f"H(5) = {form_class_number(5)}")
    for n in range(1, n_max + 1):
        rec = class_record(5, 5**n)
        d = 5 ** (2 * n + 1)
        H = form_class_number(d) if d <= FORM_SIZE_CUTOFF else None
        res.items.append({"n": n, "f": 5**n, "H_rel": rec.H_rel, "h_rel": rec.h_rel,
                          "d": d, "H_forms": H})
        if rec.H_rel != 1:
            res.fail(f"H_5(5^{n}) = {rec.H_rel}")
        if H is not None and H != 1:
            res.fail(f"H({d}) = {H}")
    res.counts = {"levels": n_max, "form_checked": sum(it["H_forms"] is not None for it in res.items)}
    return res


# ---------------------------------------------------------------- witness sweep

def recheck_witness(m: int, f: int) -> bool:
    """Independent re-validation of a witness prime, with caches bypassed."""
    u = fundamental_unit.__wrapped__(m)
    return (is_prime(f) and m % f == 0 and u.y % f != 0
            and relative_class_number(discriminant_of(m), f) == 1)


def _sweep_items(ms):
    out = []
    for m in ms:
        u = fundamental_unit(m)
        if u.y % m == 0:
            out.append({"m": m, "status": "skipped", "reason": "m | y"})
            continue
        d0 = discriminant_of(m)
        f = next(q for q in prime_divisors(m) if u.y % q)
        out.append({"m": m, "d0": d0, "status": "witness", "f": f,
                    "y_mod_f": u.y % f, "h": relative_class_number(d0, f)})
    return out


@_timed
def sweep_theorem_3_1(m_max: int = 45, jobs: int = 1) -> CampaignResult:
    """For squarefree m with m not dividing y, exhibit a prime f | m with h_{d0}(f) = 1."""
    if m_max < 2:
        raise ValueError("m_max must be >= 2")
    res = CampaignResult("sweep31", {"m_max": m_max})
    res.items = _pmap(_sweep_items, [m for m in squarefree_upto(m_max) if m > 1], jobs)
    for it in res.items:
        if it["status"] == "witness" and not (it["h"] == 1 and recheck_witness(it["m"], it["f"])):
            res.fail(f"witness f={it['f']} for m={it['m']} does not verify")
    res.counts = {"witnesses": sum(it["status"] == "witness" for it in res.items),
                  "skipped": sum(it["status"] == "skipped" for it in res.items)}
    return res


# ---------------------------------------------------------------- forms vs units

def _cross_items(args):
    out = []
    for d0, limit in args:
        f = 1
        while d0 * f * f <= limit:
            rec = class_record(d0, f)
            out.append({"d0": d0, "f": f, "H_forms": relative_form_class_number(d0, f),
                        "h_plus_rel": rec.h_plus_rel, "h_rel": rec.h_rel,
                        "norm_eps_d0": rec.norm_eps_d0, "norm_eps_d0f2": rec.norm_eps_d0f2})
            f += 1
    return out


@_timed
def cross_check_forms(limit: int = 20000, jobs: int = 1) -> CampaignResult:
    """Relative form class numbers against h_plus from psi/phi for all d0 f^2 <= limit."""
    if limit < 20:
        raise ValueError("limit must be >= 20")
    res = CampaignResult("crosscheck", {"limit": limit})
    d0s = [d for d in range(5, limit + 1) if is_fundamental_discriminant(d)]
    res.items = _pmap(_cross_items, [(d, limit) for d in d0s], jobs)
    for it in res.items:
        if it["H_forms"] != it["h_plus_rel"]:
            res.fail(f"({it['d0']}, {it['f']}): forms give {it['H_forms']}, units give {it['h_plus_rel']}")
        if it["norm_eps_d0"] == 1 and it["norm_eps_d0f2"] == -1:
            res.fail(f"({it['d0']}, {it['f']}): impossible norm pattern")
        doubled = it["norm_eps_d0"] == -1 and it["norm_eps_d0f2"] == 1
        if it["h_plus_rel"] != (2 if doubled else 1) * it["h_rel"]:
            res.fail(f"({it['d0']}, {it['f']}): factor-of-two rule broken")
    res.counts = {"pairs": len(res.items), "fields": len(d0s),
                  "doubled": sum(it["h_plus_rel"] == 2 * it["h_rel"] for it in res.items),
                  "mismatches": len(res.failures)}
    return res


# ---------------------------------------------------------------- other m | y fields

def _stephens_items(args):
    out = []
    for m, f in args:
        d0 = discriminant_of(m)
        u = fundamental_unit(m)
        h = relative_class_number(d0, f)
        half = None
        if f % 2 and m % f and u.norm == 1:
            half = half_power_membership(m, f)
        out.append({"m": m, "f": f, "h": h, "phi": phi(d0, f), "half_power": half})
    return out


@_timed
def stephens_evidence(f_max: int = 10**3, fields=STEPHENS_FIELDS, jobs: int = 1) -> CampaignResult:
    """Relative class numbers at primes f <= f_max for the known m | y fields.

    Only m = 46 carries a proof; for the others this is evidence, so the
    result is never marked failed on their account.
    """
    res = CampaignResult("stephens", {"f_max": f_max, "fields": ",".join(map(str, fields))})
    args = [(m, f) for m in fields for f in primes_upto(f_max)]
    res.items = _pmap(_stephens_items, args, jobs)
    for m in fields:
        rows = [it for it in res.items if it["m"] == m]
        res.counts[f"min_h_{m}"] = min(it["h"] for it in rows)
        if m == M46 and res.counts[f"min_h_{m}"] < 2:
            res.fail("m = 46 has a prime conductor with relative class number 1")
    return res
