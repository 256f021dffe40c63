"""Full verification: oracle suite plus table reproduction.

Table reproduction recomputes every classification row through the
geometry pipeline at eps = 1 and demands exact equality with the
closed-form column values; the oracle suite exercises the float
brute-force checks.  Everything is deterministic given the seed.
"""

from __future__ import annotations

from .closedform import expected
from .geometry import report
from .catalog import enumerate_table
from .oracle import OracleReport, standard_suite


def table_reports(which: str, param_bound: int) -> list[OracleReport]:
    out = []
    for entry in enumerate_table(which, param_bound):
        rep = report(entry.label)
        want = expected(entry.label)
        ok = (rep.psi_sq == want.psi_sq
              and rep.injectivity_radius.radicand == want.i_radicand
              and rep.diameter.radicand == want.d_radicand)
        exact = (f"psi={want.psi_sq};i=pi*sqrt({want.i_radicand});"
                 f"d=pi*sqrt({want.d_radicand})")
        got = (f"psi={rep.psi_sq};i={rep.injectivity_radius.exact_str()};"
               f"d={rep.diameter.exact_str()}")
        out.append(OracleReport(
            name=f"table{which} {entry.label}",
            exact=exact,
            numeric=0.0 if ok else 1.0,
            error=0.0 if ok else 1.0,
            passed=ok,
            note=got if not ok else "",
        ))
    return out


def run_all(seed: int, samples: int = 100_000, oracle_max_rank: int = 8,
            table_bound: int = 12) -> list[OracleReport]:
    reports = standard_suite(seed, samples=samples, max_rank=oracle_max_rank)
    reports.extend(table_reports("4.1", table_bound))
    reports.extend(table_reports("4.2", table_bound))
    return reports
