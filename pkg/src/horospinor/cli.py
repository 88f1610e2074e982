"""Command line interface: line-delimited JSON in, line-delimited JSON out.

Exit codes: 0 when everything passes, 1 when a validation or identity
check fails, 2 when the input cannot be parsed or lies outside the domain
of the command.
"""

import argparse
import json
import math
import sys
import time

import numpy as np

from .clifford import (
    INF,
    P0,
    CliffordMatrix,
    Mat2,
    act_spinor,
    check_clifford,
    compose,
    diagonal,
    inverse,
    is_inf,
    is_parabolic,
    mobius_apply,
    random_clifford,
)
from .errors import DegenerateConfigurationError, HoroSpinorError
from .horosphere import (
    boundary_to_uhs,
    decorated_horosphere_from_spinor,
    disc_boundary_to_uhs,
    hyperboloid_boundary_to_disc,
    hyperboloid_to_disc,
)
from .lambda_length import (
    antisymmetry_residual,
    holonomy_residual,
    lambda_geometric,
    lambda_pdet,
    ptolemy_residual,
    signed_match_residual,
)
from .minkowski_flags import (
    act_minkowski,
    dphi1,
    dphi1_matrix,
    fibre_phase,
    hermitian_det,
    minkowski_inner,
    phi1,
)
from .quasiplucker import (
    SpinorQuad,
    gr_plucker_residual,
    gr_skew_symmetry_residual,
    quasi_plucker,
    quasidet_2x2,
    spinor_quasidets,
)
from .quaternion import Quaternion, default_tol, para_dot_cross
from .spinor import Spinor, bracket, check_spinor, random_paravector, random_quaternion, random_spinor, section_s

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    """Malformed or out-of-domain command input."""


# ---------------------------------------------------------------- output

def _fmt(x):
    if isinstance(x, bool) or x is None:
        return json.dumps(x)
    if isinstance(x, (float, np.floating)):
        x = float(x)
        if math.isnan(x) or math.isinf(x):
            return json.dumps(str(x))
        return format(x, ".17g")
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, str):
        return json.dumps(x)
    if isinstance(x, Quaternion):
        return _fmt(x.to_list())
    if isinstance(x, dict):
        return "{" + ", ".join(json.dumps(str(k)) + ": " + _fmt(v) for k, v in x.items()) + "}"
    if isinstance(x, (list, tuple, np.ndarray)):
        return "[" + ", ".join(_fmt(v) for v in x) + "]"
    raise TypeError("cannot serialize {!r}".format(type(x)))


def dumps(obj):
    """JSON with every float written to 17 significant digits."""
    return _fmt(obj)


# ---------------------------------------------------------------- parsing

def _quaternion(x, what):
    try:
        return Quaternion.coerce(x)
    except (TypeError, ValueError) as exc:
        raise InputError("{}: {}".format(what, exc)) from exc


def _spinor_pair(obj, what="spinor"):
    if isinstance(obj, dict) and "xi" in obj and "eta" in obj:
        return _quaternion(obj["xi"], what + ".xi"), _quaternion(obj["eta"], what + ".eta")
    if isinstance(obj, list) and len(obj) == 2:
        return _quaternion(obj[0], what + "[0]"), _quaternion(obj[1], what + "[1]")
    raise InputError("{} must be {{\"xi\": [...], \"eta\": [...]}}".format(what))


def _spinor(obj, tol, what="spinor"):
    xi, eta = _spinor_pair(obj, what)
    try:
        return Spinor(xi, eta, tol)
    except HoroSpinorError as exc:
        raise InputError("{}: {}".format(what, exc)) from exc


def _mat_entries(obj):
    if isinstance(obj, dict) and all(k in obj for k in "abcd"):
        return [_quaternion(obj[k], k) for k in "abcd"]
    if isinstance(obj, list) and len(obj) == 2 and all(isinstance(r, list) and len(r) == 2 for r in obj):
        return [_quaternion(obj[r][c], "matrix[{}][{}]".format(r, c)) for r in range(2) for c in range(2)]
    raise InputError("matrix must be {\"a\", \"b\", \"c\", \"d\"} or [[a, b], [c, d]]")


def _clifford(obj, tol):
    try:
        return CliffordMatrix(*_mat_entries(obj), tol=tol)
    except HoroSpinorError as exc:
        raise InputError("matrix: {}".format(exc)) from exc


def _extended_paravector(x):
    if x == "inf":
        return INF
    q = _quaternion(x, "paravector")
    if q.d != 0.0:
        raise InputError("paravector has a k-component")
    return q


def _ext_out(z):
    return "inf" if is_inf(z) else z.to_paravector_list()


# ---------------------------------------------------------------- commands

def cmd_validate(obj, args):
    tol = args.tol
    if isinstance(obj, dict) and "xi" in obj:
        xi, eta = _spinor_pair(obj)
        check = check_spinor(xi, eta, tol)
        out = {"command": "validate", "kind": "spinor"}
        out.update(check.as_dict())
        out["tol"] = tol
        return out, EXIT_OK if check.valid else EXIT_FAIL
    m = Mat2(*_mat_entries(obj.get("matrix", obj) if isinstance(obj, dict) else obj))
    check = check_clifford(m, tol)
    out = {"command": "validate", "kind": "clifford"}
    out.update(check.as_dict())
    out["tol"] = tol
    return out, EXIT_OK if check.valid else EXIT_FAIL


def cmd_lambda(obj, args):
    if not isinstance(obj, dict) or "k1" not in obj or "k2" not in obj:
        raise InputError("lambda input must be {\"k1\": spinor, \"k2\": spinor}")
    k1 = _spinor(obj["k1"], args.tol, "k1")
    k2 = _spinor(obj["k2"], args.tol, "k2")
    out = {"command": "lambda", "method": args.method}
    code = EXIT_OK
    if args.method in ("pdet", "both"):
        out["pdet"] = lambda_pdet(k1, k2)
    if args.method in ("geometric", "both"):
        try:
            out["geometric"] = lambda_geometric(k1, k2)
        except HoroSpinorError as exc:
            raise InputError("geometric lambda undefined: {}".format(exc)) from exc
    if args.method == "both":
        r = signed_match_residual(out["pdet"], out["geometric"])
        out["residual"] = r
        out["tol"] = args.match_tol
        out["pass"] = r <= args.match_tol
        code = EXIT_OK if out["pass"] else EXIT_FAIL
    return out, code


def cmd_horosphere(obj, args):
    k = _spinor(obj, args.tol)
    out = {"command": "horosphere"}
    out.update(decorated_horosphere_from_spinor(k, args.tol).as_dict())
    return out, EXIT_OK


def _to_null(point, frm, tol):
    """A boundary point in any model -> future null vector with T = 1."""
    if frm == "hyperboloid":
        p = np.asarray(point, dtype=float)
        if p.shape != (5,) or p[0] <= 0 or abs(minkowski_inner(p, p)) > tol * float(p @ p):
            raise InputError("expected a future null vector (T, W, X, Y, Z)")
        return p / p[0]
    if frm == "disc":
        u = np.asarray(point, dtype=float)
        if u.shape != (4,) or abs(u @ u - 1.0) > tol:
            raise InputError("disc boundary point must be a unit 4-vector")
        return np.concatenate(([1.0], u))
    z = _extended_paravector(point)
    if is_inf(z):
        return np.array([1.0, 0.0, 0.0, 0.0, 1.0])
    # phi1((z, 1)) = (|z|^2 + 1, 2z, |z|^2 - 1), rescaled to T = 1.
    n2 = z.norm2()
    return np.array([n2 + 1.0, 2 * z.a, 2 * z.b, 2 * z.c, n2 - 1.0]) / (n2 + 1.0)


def cmd_convert(obj, args):
    """Boundary points between hyperboloid, disc and upper half-space.

    A hyperboloid point with <x, x> = 1 is an interior point and may only
    be sent to the disc.
    """
    if not isinstance(obj, dict) or "point" not in obj:
        raise InputError("convert input must be {\"point\": ...}")
    frm, to = args.from_model, args.to_model
    point = obj["point"]
    out = {"command": "convert", "from": frm, "to": to}
    try:
        if frm == "hyperboloid":
            x = np.asarray(point, dtype=float)
            if x.shape == (5,) and abs(minkowski_inner(x, x) - 1.0) <= args.tol * max(1.0, float(x @ x)):
                if to != "disc":
                    raise InputError("interior hyperboloid points convert only to the disc")
                out["point"] = hyperboloid_to_disc(x, args.tol)
                return out, EXIT_OK
        p = _to_null(point, frm, args.tol)
        if to == "hyperboloid":
            out["point"] = p
        elif to == "disc":
            out["point"] = hyperboloid_boundary_to_disc(p, args.tol)
        elif frm == "disc":
            out["point"] = _ext_out(disc_boundary_to_uhs(point, args.tol))
        else:
            out["point"] = _ext_out(boundary_to_uhs(p, args.tol))
    except HoroSpinorError as exc:
        raise InputError(str(exc)) from exc
    return out, EXIT_OK


def cmd_act(obj, args):
    if not isinstance(obj, dict) or "matrix" not in obj:
        raise InputError("act input must contain \"matrix\"")
    A = _clifford(obj["matrix"], args.tol)
    out = {"command": "act"}
    try:
        if "spinor" in obj:
            k = _spinor(obj["spinor"], args.tol)
            out["spinor"] = act_spinor(A, k, tol=1e-8).as_dict()
        elif "point" in obj:
            p = np.asarray(obj["point"], dtype=float)
            if p.shape != (5,):
                raise InputError("point needs 5 coordinates")
            out["point"] = act_minkowski(A, p)
        elif "paravector" in obj:
            out["paravector"] = _ext_out(mobius_apply(A, _extended_paravector(obj["paravector"]), args.tol))
        else:
            raise InputError("act needs one of \"spinor\", \"point\", \"paravector\"")
    except HoroSpinorError as exc:
        raise InputError(str(exc)) from exc
    return out, EXIT_OK


# ---------------------------------------------------------------- verify suites
# Each suite maps a numpy Generator to one non-negative residual.

def _nondegenerate_spinors(rng, n):
    while True:
        ks = [random_spinor(rng) for _ in range(n)]
        if all(abs(bracket(ks[a], ks[b])) > 1e-6 * abs(ks[a]) * abs(ks[b])
               for a in range(n) for b in range(a + 1, n)):
            return ks


def _unit_quaternion(rng):
    q = random_quaternion(rng)
    return q * (1.0 / abs(q))


def suite_ptolemy(rng):
    return abs(ptolemy_residual(*_nondegenerate_spinors(rng, 4)))


def suite_antisym(rng):
    return antisymmetry_residual(random_spinor(rng), random_spinor(rng))


def suite_holonomy(rng):
    return holonomy_residual(*_nondegenerate_spinors(rng, 3))


def suite_lambda(rng):
    k1, k2 = _nondegenerate_spinors(rng, 2)
    return signed_match_residual(lambda_pdet(k1, k2), lambda_geometric(k1, k2))


def suite_invariance(rng):
    k1, k2 = random_spinor(rng), random_spinor(rng)
    A = random_clifford(rng)
    before = bracket(k1, k2)
    after = bracket(act_spinor(A, k1, tol=1e-8), act_spinor(A, k2, tol=1e-8))
    return abs(after - before) / max(1.0, abs(before))


def conformal_residual(k, v, w):
    """|<D s_v, D s_w> + 4 |k|^4 v.w| / (4 |k|^4 |v| |w|)."""
    k4 = k.norm2() ** 2
    dot, _ = para_dot_cross(v, w)
    lhs = minkowski_inner(dphi1(k, section_s(v, k)), dphi1(k, section_s(w, k)))
    return abs(lhs + 4.0 * k4 * dot) / (4.0 * k4 * abs(v) * abs(w))


def detmiracle_residual(k, v):
    """|det D phi1(s_v k) + |v|^2 |k|^4| / (|v|^2 |k|^4)."""
    target = v.norm2() * k.norm2() ** 2
    return abs(hermitian_det(dphi1_matrix(k, section_s(v, k))) + target) / target


def suite_conformal(rng):
    k = random_spinor(rng)
    return conformal_residual(k, random_paravector(rng), random_paravector(rng))


def suite_detmiracle(rng):
    k = random_spinor(rng)
    return detmiracle_residual(k, random_paravector(rng))


def quasi_residual(quad):
    """Largest defect among the quasideterminant and quasi-Plucker identities on a quad."""
    quad = SpinorQuad.coerce(quad)
    worst = 0.0
    for l, m, n in ((0, 1, 2), (1, 3, 0), (2, 0, 3), (3, 2, 1)):
        p1 = quasi_plucker(quad, l, m, n, 1)
        p2 = quasi_plucker(quad, l, m, n, 2)
        worst = max(worst, abs(p1 - p2) / max(1.0, abs(p1)))
        worst = max(worst, abs(gr_skew_symmetry_residual(quad, l, m, n)))
    worst = max(worst, abs(gr_plucker_residual(quad, 2, 1, 0, 3)))
    worst = max(worst, abs(gr_plucker_residual(quad, 0, 3, 1, 2)))
    M = quad.submatrix(0, 1)
    closed = spinor_quasidets(quad[0], quad[1])
    for (p, q), val in closed.items():
        direct = quasidet_2x2(M, p, q)
        worst = max(worst, abs(direct - val) / max(1.0, abs(val)))
    return worst


def suite_quasi(rng):
    return quasi_residual([random_spinor(rng, p_inf=0.0) for _ in range(4)])


def parabolic_residual(A):
    """Structural defects of a matrix expected to be parabolic (inf if misclassified)."""
    chk = is_parabolic(A)
    if not chk.parabolic:
        return math.inf
    return max(chk.square_residual, chk.trace_residual, chk.b_residual, chk.c_residual)


def suite_parabolic(rng):
    B = random_clifford(rng)
    A = compose(compose(B, P0, tol=1e-8), inverse(B), tol=1e-8)
    res = parabolic_residual(A)
    # A dilation conjugate must not pass as parabolic.
    s = 1.5 + rng.random()
    N = compose(compose(B, diagonal(Quaternion(s)), tol=1e-8), inverse(B), tol=1e-8)
    if is_parabolic(N):
        return math.inf
    return res


def suite_fibres(rng):
    k = random_spinor(rng)
    alpha = _unit_quaternion(rng)
    ka = k * alpha
    p, q = phi1(k), phi1(ka)
    res = float(np.linalg.norm(p - q)) / max(1.0, float(np.linalg.norm(p)))
    recovered = fibre_phase(k, ka)
    return max(res, abs(recovered - alpha))


SUITES = {
    "ptolemy": (suite_ptolemy, 1e-8),
    "antisym": (suite_antisym, 1e-12),
    "holonomy": (suite_holonomy, 1e-9),
    "conformal": (suite_conformal, 1e-8),
    "detmiracle": (suite_detmiracle, 1e-8),
    "quasi": (suite_quasi, 1e-8),
    "parabolic": (suite_parabolic, 1e-8),
    "fibres": (suite_fibres, 1e-10),
    "lambda": (suite_lambda, 1e-6),
    "invariance": (suite_invariance, 1e-8),
}


def trial_seed(seed, t):
    """64-bit per-trial seed derived from (seed, trial index) by SeedSequence."""
    return int(np.random.SeedSequence([seed, t]).generate_state(1, np.uint64)[0])


def run_suite(name, trials, seed, tol=None):
    """Run a randomized identity check; returns the report dict."""
    fn, default = SUITES[name]
    tol = default if tol is None else tol
    worst, worst_seed = -1.0, None
    for t in range(trials):
        s = trial_seed(seed, t)
        r = fn(np.random.default_rng(s))
        if r > worst or math.isnan(r):
            worst, worst_seed = r, s
    if trials == 0:
        worst = 0.0
    return {
        "identity": name,
        "trials": trials,
        "max_residual": worst,
        "worst_seed": worst_seed,
        "tol": tol,
        "pass": bool(worst <= tol),
    }


def cmd_verify(args, out):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    code = EXIT_OK
    for name in names:
        start = time.perf_counter()
        report = run_suite(name, args.trials, args.seed, args.tol)
        if args.timing:
            report["wall_time"] = time.perf_counter() - start
        out.write(dumps(report) + "\n")
        if not report["pass"]:
            code = EXIT_FAIL
    return code


# ---------------------------------------------------------------- entry point

COMMANDS = {
    "validate": cmd_validate,
    "lambda": cmd_lambda,
    "horosphere": cmd_horosphere,
    "convert": cmd_convert,
    "act": cmd_act,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="horospinor",
        description="Quaternionic spinors, horospheres and lambda lengths in hyperbolic 4-space.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--tol", type=float, default=None, help="relative tolerance")
        p.add_argument("--json", action="store_true", default=True, help="JSON output (the only format)")
        return p

    add("validate", "check spinor or Clifford matrix conditions")
    p = add("lambda", "lambda length of two spinors")
    p.add_argument("--method", choices=("pdet", "geometric", "both"), default="pdet")
    p.add_argument("--match-tol", type=float, default=1e-9, help="tolerance for --method both")
    add("horosphere", "decorated horosphere of a spinor")
    p = add("convert", "convert boundary points between models")
    p.add_argument("--from", dest="from_model", choices=("hyperboloid", "disc", "uhs"), required=True)
    p.add_argument("--to", dest="to_model", choices=("hyperboloid", "disc", "uhs"), required=True)
    add("act", "apply a Clifford matrix to a spinor, point or paravector")
    p = add("verify", "randomized identity checks")
    p.add_argument("--suite", choices=tuple(SUITES) + ("all",), default="all")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timing", action="store_true", help="add wall time (makes output non-reproducible)")
    return parser


def main(argv=None, stdin=None, stdout=None, stderr=None):
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.command == "verify":
        if args.trials < 0 or args.seed < 0:
            stderr.write("trials and seed must be non-negative\n")
            return EXIT_INPUT
        return cmd_verify(args, stdout)
    if args.tol is None:
        args.tol = default_tol()

    code = EXIT_OK
    handler = COMMANDS[args.command]
    for lineno, line in enumerate(stdin, 1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
            result, status = handler(obj, args)
        except (json.JSONDecodeError, InputError, DegenerateConfigurationError) as exc:
            msg = "line {}: {}".format(lineno, exc)
            stderr.write(msg + "\n")
            stdout.write(dumps({"command": args.command, "error": msg}) + "\n")
            code = max(code, EXIT_INPUT)
            continue
        stdout.write(dumps(result) + "\n")
        code = max(code, status)
    return code


def entry_point():
    sys.exit(main())
