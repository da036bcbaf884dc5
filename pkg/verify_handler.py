"""
Property suites over every small QSD code: enumerator identities, the E to F
transfer, the weight-two bijection, ring checks and the closed-form d_RC
formulas against the exact search.
"""

import sys

from config import ORACLE_MAX_N, VERIFY_MAX_N
from dna import d_rc_bruteforce, d_rc_exact, formula_for_residue, rc_profile_table
from enumerators import cwe, gcw_closed_form, gcw_direct, joint_as_cwe, joint_weight_enumerator
from qsd import check_even_ab_support, is_qsd, qsd_codes, transfer_e_to_f
from rings4 import RINGS, find_gc_betas, gc_content, gc_content_mod_j, validate_tables, verify_isomorphisms
from so_classify import are_equivalent, classify_so, count_with_weight_two, extend_d2, reduce_d2

SUITES = ("rings", "cwe_joint", "gcw_closed_form", "transfer", "weight_two", "oracle", "formula")


def _record(suite: str, code: str, passed, detail: str = "") -> dict:
    status = passed if isinstance(passed, str) else ("pass" if passed else "fail")
    return {"suite": suite, "code": code, "status": status, "detail": detail}


def _codes(n_max: int, parallelism: int = 1):
    for n in range(1, n_max + 1):
        yield from qsd_codes(n, "E", parallelism=parallelism)


def _label(C) -> str:
    return f"n={C.n} res={' '.join(format(r, f'0{C.n}b') for r in C.res.rows) or '0'}"


def check_rings() -> list[dict]:
    records = []
    for name, R in RINGS.items():
        problems = validate_tables(R.add_table, R.mul_table, R.characteristic)
        records.append(_record("rings", name, not problems, "; ".join(problems)))
        if R.gc_beta is not None:
            betas = find_gc_betas(R)
            chosen = (R.names[R.gc_beta[0]], R.gc_beta[1])
            records.append(_record("rings", f"{name} gc map", chosen in betas, f"{chosen} in {betas}"))
    for label, ok in verify_isomorphisms().items():
        records.append(_record("rings", label, ok))
    mod_j = all(gc_content("E", x) == gc_content_mod_j(x) for x in "0abc")
    records.append(_record("rings", "E gc map is reduction mod J", mod_j))
    return records


def check_cwe_joint(codes) -> list[dict]:
    """CWE of a QSD code equals the joint enumerator of (res, tor) in CWE order."""
    records = []
    for C in codes:
        ok = cwe(C) == joint_as_cwe(joint_weight_enumerator(C.res, C.tor))
        records.append(_record("cwe_joint", _label(C), ok))
    return records


def check_gcw_closed_form(codes) -> list[dict]:
    records = []
    for C in codes:
        direct, closed = gcw_direct(C), gcw_closed_form(C.res, C.n)
        detail = "" if direct == closed else f"{direct} != {closed}"
        records.append(_record("gcw_closed_form", _label(C), direct == closed, detail))
    return records


def check_transfer(codes) -> list[dict]:
    """The E to F image is QSD over F with the same GC enumerator."""
    records = []
    for C in codes:
        try:
            image = transfer_e_to_f(C)
            ok = is_qsd("F", image) and gcw_direct(image) == gcw_direct(C) and check_even_ab_support(C)
            records.append(_record("transfer", _label(C), ok))
        except Exception as e:
            records.append(_record("transfer", _label(C), False, str(e)))
    return records


def check_weight_two(n_max: int, parallelism: int = 1) -> list[dict]:
    """Codes with a weight-2 word are in bijection with the codes two coordinates shorter."""
    records = []
    for n in range(3, n_max + 1):
        for k in range(1, n // 2 + 1):
            with_two = count_with_weight_two(n, k, parallelism=parallelism)
            shorter = classify_so(n - 2, k - 1, parallelism=parallelism).count
            records.append(_record("weight_two", f"[{n},{k}]", with_two == shorter, f"{with_two} vs {shorter}"))
            for D in classify_so(n - 2, k - 1, parallelism=parallelism).representatives:
                if not are_equivalent(reduce_d2(extend_d2(D)), D):
                    records.append(_record("weight_two", f"[{n - 2},{k - 1}] {D}", False, "round trip"))
    return records


def check_oracle(codes) -> list[dict]:
    """Pairing search equals the literal n! maximum."""
    records = []
    for C in codes:
        if C.n > ORACLE_MAX_N:
            continue
        for m, profile in rc_profile_table(C, include_zero=C.k1 == 0).items():
            literal = d_rc_bruteforce(C, m)
            records.append(_record(
                "oracle", f"{_label(C)} m={m}", literal == profile.d_rc, f"{profile.d_rc} vs {literal}",
            ))
    return records


def check_formulas(codes, parallelism: int = 1) -> list[dict]:
    """
    Closed forms against the exact search. One-generator residues must agree;
    disagreements for the two-generator shapes are reported, not failed.
    """
    records = []
    for C in codes:
        shape = formula_for_residue(C.res)
        if shape is None:
            continue
        kind, values = shape
        for m, predicted in sorted(values.items()):
            exact = d_rc_exact(C, m, parallelism).d_rc
            if exact == predicted:
                status = "pass"
            else:
                status = "fail" if kind == "single" else "disagree"
            records.append(_record(
                f"formula:{kind}", f"{_label(C)} m={m}", status, f"formula {predicted}, exact {exact}",
            ))
    return records


def run_all(n_max: int = VERIFY_MAX_N, parallelism: int = 1, verbose: bool = True) -> list[dict]:
    """Run every suite over all QSD codes of length <= n_max."""
    codes = list(_codes(n_max, parallelism))
    phases = [
        ("rings", check_rings),
        ("cwe_joint", lambda: check_cwe_joint(codes)),
        ("gcw_closed_form", lambda: check_gcw_closed_form(codes)),
        ("transfer", lambda: check_transfer(codes)),
        ("weight_two", lambda: check_weight_two(n_max, parallelism)),
        ("oracle", lambda: check_oracle(codes)),
        ("formula", lambda: check_formulas(codes, parallelism)),
    ]
    records = []
    for name, phase in phases:
        if verbose:
            print(f"🔍 Suite {name}...")
        try:
            found = phase()
        except Exception as e:
            print(f"  ❌ Error in {name}: {e}", file=sys.stdout if verbose else sys.stderr)
            found = [_record(name, "*", False, str(e))]
        records.extend(found)
        if verbose:
            failed = sum(1 for r in found if r["status"] == "fail")
            icon = "✅" if not failed else "❌"
            print(f"  {icon} {len(found) - failed}/{len(found)} passed")
    return records


def summarize(records: list[dict]) -> dict[str, dict[str, int]]:
    """Status counts per suite."""
    summary = {}
    for r in records:
        counts = summary.setdefault(r["suite"], {})
        counts[r["status"]] = counts.get(r["status"], 0) + 1
    return summary


def has_failures(records: list[dict]) -> bool:
    return any(r["status"] == "fail" for r in records)
