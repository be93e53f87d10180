"""Compare the two readings of the dual Ĥ used to build the double.

For each H: is Ĥ Hopf, are the Doi–Takeuchi actions a matched pair, and do the
bicrossed and twisted constructions of D(H) agree?

    python3 scripts/hat_convention.py
"""
from hopfbrace.crossprod import bicrossed, check_matched_pair
from hopfbrace.drinfeld import T_of, deform, dt_actions, omega
from hopfbrace.exactfield import FieldSpec
from hopfbrace.hopfcore import check_hopf, cop_dual, group_algebra, hat_dual, sweedler4
from hopfbrace.lintensor import mor_eq
from hopfbrace.morphlang.groups import builtin
from hopfbrace.report import PreconditionFailed

Q, F5 = FieldSpec.rational(), FieldSpec.prime(5)


def row(H, hat):
    out = {"hat Hopf": check_hopf(hat).overall}
    mp = dt_actions(H, hat)
    rep = check_matched_pair(mp)
    out["matched pair"] = rep.overall if rep.passed else "fail: " + ", ".join(rep.failed())
    try:
        w, winv = omega(H, hat)
        D_def = deform(T_of(H, hat), w, winv)
        D_mp = bicrossed(mp, force=True)
        out["D_mp = D_def"] = "yes" if mor_eq(D_mp.mu, D_def.mu) else "no"
    except PreconditionFailed as e:
        out["D_mp = D_def"] = f"n/a ({type(e).__name__})"
    return out


def main():
    cases = [("F[C2]", group_algebra(builtin("C2"), Q)), ("F[C3]", group_algebra(builtin("C3"), Q)),
             ("F[S3]", group_algebra(builtin("S3"), Q)), ("Sweedler/Q", sweedler4(Q)),
             ("Sweedler/F5", sweedler4(F5))]
    for label, H in cases:
        H = H.with_antipode()
        for conv, hat in (("pairing", hat_dual(H)), ("transpose of c∘δ", cop_dual(H))):
            print(f"{label:12} {conv:17} {row(H, hat)}")


if __name__ == "__main__":
    main()
