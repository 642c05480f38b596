"""Relative class numbers at small prime conductors for the known fields with m | y.

For each field prints the primes f <= FMAX where h_{d0}(f) = 1, if any, and
confirms those by counting form classes directly.
"""

import sys

from relclass.arith import discriminant_of
from relclass.campaigns import STEPHENS_FIELDS, stephens_evidence
from relclass.forms import relative_form_class_number
from relclass.pell import fundamental_unit

FMAX = int(sys.argv[1]) if len(sys.argv) > 1 else 1000

res = stephens_evidence(FMAX)
for m in STEPHENS_FIELDS:
    u = fundamental_unit(m)
    d0 = discriminant_of(m)
    rows = [it for it in res.items if it["m"] == m]
    ones = [it["f"] for it in rows if it["h"] == 1]
    failed_half = [it["f"] for it in rows if it["half_power"] is False]
    print(f"m={m} d0={d0} m%8={m % 8} norm={u.norm:+d} digits(y)={len(str(u.y))} "
          f"h=1 at f={ones or '-'} half-power failures={failed_half or '-'}")
    for f in ones:
        print(f"    forms: H({d0}*{f}^2)/H({d0}) = {relative_form_class_number(d0, f)}")
