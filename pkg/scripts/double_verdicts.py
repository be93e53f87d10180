"""Brace verdicts for the pairs built from the double, next to the checkers
that characterize them.

    python3 scripts/double_verdicts.py
"""
import time

from hopfbrace.bracelab import check_C1_tensor, check_compatibility, check_z1_z2
from hopfbrace.drinfeld import brace_D_T, brace_T_D, check_d_cocom_class, check_d_noncomm, double_bundle
from hopfbrace.exactfield import FieldSpec
from hopfbrace.hopfcore import dual_group_algebra, group_algebra, sweedler4
from hopfbrace.morphlang.groups import builtin
from hopfbrace.report import PreconditionFailed

Q = FieldSpec.rational()


def verdict(rep):
    return "pass" if rep.passed else "FAIL"


def main():
    cases = [(f"F[{g}]", group_algebra(builtin(g), Q)) for g in ("C2", "C3", "C4", "S3")]
    cases += [("F[S3]*", dual_group_algebra(builtin("S3"), Q)), ("Sweedler", sweedler4(Q))]
    for label, H in cases:
        t0 = time.perf_counter()
        H = H.with_antipode()
        b = double_bundle(H)
        td = verdict(check_compatibility(brace_T_D(H, b)))
        dt = verdict(check_compatibility(brace_D_T(H, b)))
        cls = check_d_cocom_class(H)
        try:
            z = verdict(check_z1_z2(b.mp))
        except PreconditionFailed as e:
            z = type(e).__name__
        print(f"{label:9} (T,D) {td:4}  class-cond {verdict(cls):4}  z1/z2 {z:26} "
              f"(D,T) {dt:4}  d-noncomm {verdict(check_d_noncomm(H)):4}  "
              f"C1-tensor {verdict(check_C1_tensor(b.mp)):4}  {time.perf_counter() - t0:5.1f} s")
        if not cls.passed:
            print(f"          failing class laws: {', '.join(cls.failed())}")


if __name__ == "__main__":
    main()
