"""Command-line front end: every library operation as a subcommand.

Exit codes: 0 success, 1 usage error, 2 domain error (not a unit, bad
primes, malformed key file, and so on). Output is deterministic: single
values print as bare decimals, vectors as comma-separated values with no
spaces, tables row-major with a header row. Message vectors are taken
from an argument or, when omitted, one per line on standard input.
"""

import argparse
import sys

from . import modmath, oracle, rsa
from .errors import DomainError, KeyFileError
from .keyfile import read_key_file, write_key_file
from .modmath import Modulus

PROG = "modrsa"


class _UsageError(Exception):
    def __init__(self, message, parser):
        super().__init__(message)
        self.parser = parser


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so run() owns the exit code."""

    def error(self, message):
        raise _UsageError(message, self)


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid int value: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _vector(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid number vector: {text!r}") from None


def _print_vector(values, out) -> None:
    print(",".join(str(v) for v in values), file=out)


def _check_line(ok: bool, oracle_value, out) -> None:
    if ok:
        print("check: ok", file=out)
    else:
        print(f"check: mismatch (oracle says {oracle_value})", file=out)
        raise DomainError(f"oracle disagreement: expected {oracle_value}")


# --- modular arithmetic commands -------------------------------------------

def _cmd_reduce(args, stdin, out):
    print(modmath.reduce(args.x, Modulus(args.n)).value, file=out)


def _cmd_binop(args, stdin, out):
    m = Modulus(args.n)
    a = modmath.reduce(args.a, m)
    b = modmath.reduce(args.b, m)
    op = {"add": modmath.add, "sub": modmath.sub, "mul": modmath.mul, "div": modmath.divide}[args.op]
    print(op(a, b).value, file=out)


def _cmd_gcd(args, stdin, out):
    if args.extended:
        cert, trace = modmath.extended_gcd(args.x, args.y)
        print(f"gcd = {cert.g}", file=out)
        print(f"a = {cert.a}", file=out)
        print(f"b = {cert.b}", file=out)
        _print_trace(trace, out)
    else:
        print(modmath.gcd(args.x, args.y), file=out)


def _print_trace(trace, out) -> None:
    # mirror the tabular layout: blank quotient on the first row, bare 0 last
    cells = []
    for row in trace.rows:
        if row.n == 0:
            cells.append(("0", "", "", ""))
        else:
            q = "" if row.quotient is None else str(row.quotient)
            cells.append((str(row.n), q, str(row.a), str(row.b)))
    header = ("n", "q", "a", "b")
    widths = [max(len(header[i]), max(len(r[i]) for r in cells)) for i in range(4)]
    print(" ".join(header[i].rjust(widths[i]) for i in range(4)).rstrip(), file=out)
    for r in cells:
        print(" ".join(r[i].rjust(widths[i]) for i in range(4)).rstrip(), file=out)


def _cmd_inverse(args, stdin, out):
    m = Modulus(args.n)
    x = modmath.reduce(args.x, m)
    result = modmath.inverse(x)
    print(result.value, file=out)
    if args.check:
        brute = oracle.inverse_brute(x)
        _check_line(brute is not None and brute.value == result.value,
                    None if brute is None else brute.value, out)


def _cmd_table(args, stdin, out):
    table = modmath.mul_table(Modulus(args.n))
    width = len(str(args.n - 1))
    labels = ["x"] + [str(c) for c in range(1, args.n)]
    print(" ".join(s.rjust(width) for s in labels).rstrip(), file=out)
    for i, row in enumerate(table, start=1):
        cells = [str(i)] + [str(r.value) for r in row]
        print(" ".join(s.rjust(width) for s in cells).rstrip(), file=out)


def _cmd_phi(args, stdin, out):
    if args.semiprime:
        if args.check:
            raise _UsageError("--check and --semiprime cannot be combined", args.parser)
        if len(args.values) != 2:
            raise _UsageError("--semiprime takes exactly two arguments: p q", args.parser)
        p, q = args.values
        print(rsa.phi_semiprime(p, q), file=out)
        return
    if len(args.values) != 1:
        raise _UsageError("phi takes exactly one argument: n", args.parser)
    n = Modulus(args.values[0])
    result = oracle.phi_brute(n)
    print(result, file=out)
    if args.check:
        # independent route: count residues that classify as units
        units = sum(
            1 for x in range(n.n)
            if modmath.classify(modmath.Residue(x, n)) is modmath.ResidueClass.UNIT
        )
        _check_line(units == result, units, out)


def _cmd_powmod(args, stdin, out):
    m = Modulus(args.n)
    x = modmath.reduce(args.x, m)
    result = modmath.pow_mod(x, args.e)
    print(result.value, file=out)
    if args.check:
        brute = oracle.naive_pow(x, args.e)
        _check_line(brute.value == result.value, brute.value, out)


def _cmd_critical(args, stdin, out):
    phi = oracle.phi_brute(Modulus(args.n))
    _print_vector(modmath.critical_exponents(args.n, phi, args.count), out)


def _cmd_classify(args, stdin, out):
    m = Modulus(args.n)
    print(modmath.classify(modmath.reduce(args.x, m)).value, file=out)


def _cmd_crt(args, stdin, out):
    x = modmath.reduce(args.x, Modulus(args.p * args.q))
    rp, rq = modmath.crt_decompose(x, args.p, args.q)
    _print_vector((rp.value, rq.value), out)


# --- RSA commands -----------------------------------------------------------

def _cmd_keygen(args, stdin, out):
    pair = rsa.keygen(args.p, args.q, args.e)
    for name in ("p", "q", "n", "phi", "e", "f"):
        print(f"{name} = {getattr(pair, name)}", file=out)
    if args.pub:
        write_key_file(args.pub, pair.public_key)
    if args.priv:
        write_key_file(args.priv, pair.private_key)


def _load_key(path, want):
    key = read_key_file(path)
    if not isinstance(key, want):
        kind = "public" if want is rsa.PublicKey else "private"
        raise KeyFileError(f"{path}: expected a {kind} key")
    return key


def _input_messages(args, stdin, n):
    """Messages from --numbers, a text argument, or stdin (one vector per line)."""
    if args.numbers is not None and args.text is not None:
        raise _UsageError("give either TEXT or --numbers, not both", args.parser)
    if args.numbers is not None:
        return [rsa.NumberMessage(args.numbers, n)]
    if args.text is not None:
        return [rsa.encode_text(args.text, n)]
    messages = []
    for lineno, line in enumerate(stdin, start=1):
        text = line.strip()
        try:
            values = () if not text else tuple(int(part) for part in text.split(","))
        except ValueError:
            raise DomainError(f"standard input line {lineno}: invalid number vector: {text!r}") from None
        messages.append(rsa.NumberMessage(values, n))
    return messages


def _input_vectors(args, stdin, n):
    """Vectors for decrypt/verify: one positional argument or stdin lines."""
    if args.vector is not None:
        return [rsa.NumberMessage(args.vector, n)]
    shim = argparse.Namespace(numbers=None, text=None, parser=args.parser)
    return _input_messages(shim, stdin, n)


def _cmd_encrypt(args, stdin, out):
    key = _load_key(args.key, rsa.PublicKey)
    for msg in _input_messages(args, stdin, key.n):
        _print_vector(rsa.encrypt(msg, key), out)


def _cmd_sign(args, stdin, out):
    key = _load_key(args.key, rsa.PrivateKey)
    for msg in _input_messages(args, stdin, key.n):
        _print_vector(rsa.sign(msg, key), out)


def _cmd_decrypt(args, stdin, out):
    key = _load_key(args.key, rsa.PrivateKey)
    for msg in _input_vectors(args, stdin, key.n):
        plain = rsa.decrypt(msg, key)
        if args.text:
            print(rsa.decode_text(plain), file=out)
        else:
            _print_vector(plain, out)


def _cmd_verify(args, stdin, out):
    key = _load_key(args.key, rsa.PublicKey)
    for msg in _input_vectors(args, stdin, key.n):
        plain = rsa.verify(msg, key)
        if args.text:
            print(rsa.decode_text(plain), file=out)
        else:
            _print_vector(plain, out)


def _cmd_suggest_primes(args, stdin, out):
    _print_vector(rsa.primes_in_range(args.lo, args.hi), out)


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog=PROG, description="Modular arithmetic and textbook RSA toolkit.")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    def command(name, handler, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(handler=handler, parser=p)
        return p

    p = command("reduce", _cmd_reduce, "canonical residue of x mod n")
    p.add_argument("x", type=int)
    p.add_argument("n", type=int)

    for op, text in (("add", "sum"), ("sub", "difference"), ("mul", "product"), ("div", "quotient")):
        p = command(op, _cmd_binop, f"{text} of a and b mod n")
        p.add_argument("a", type=int)
        p.add_argument("b", type=int)
        p.add_argument("n", type=int)
        p.set_defaults(op=op)

    p = command("gcd", _cmd_gcd, "greatest common divisor, optionally with the Bezout table")
    p.add_argument("--extended", action="store_true", help="print a, b with a*x + b*y = gcd, plus the table")
    p.add_argument("x", type=_natural)
    p.add_argument("y", type=_natural)

    p = command("inverse", _cmd_inverse, "multiplicative reciprocal of x mod n")
    p.add_argument("--check", action="store_true", help="cross-validate against the brute-force scan")
    p.add_argument("x", type=int)
    p.add_argument("n", type=int)

    p = command("table", _cmd_table, "multiplication table mod n, rows and columns 1..n-1")
    p.add_argument("n", type=int)

    p = command("phi", _cmd_phi, "number of units: phi <n>, or phi --semiprime <p> <q>")
    p.add_argument("--check", action="store_true", help="cross-validate the unit count by classification")
    p.add_argument("--semiprime", action="store_true", help="use the (p-1)(q-1) formula for distinct primes")
    p.add_argument("values", type=_natural, nargs="+")

    p = command("powmod", _cmd_powmod, "x**e mod n by square-and-multiply")
    p.add_argument("--check", action="store_true", help="cross-validate against naive repeated multiplication")
    p.add_argument("x", type=int)
    p.add_argument("e", type=_natural)
    p.add_argument("n", type=int)

    p = command("critical", _cmd_critical, "first COUNT exponents 1, 1+phi, 1+2*phi, ... (square-free n)")
    p.add_argument("n", type=_natural)
    p.add_argument("count", type=_natural)

    p = command("classify", _cmd_classify, "zero, unit, or zero-divisor")
    p.add_argument("x", type=int)
    p.add_argument("n", type=int)

    p = command("crt", _cmd_crt, "coordinates (x mod p, x mod q) for a modulus p*q")
    p.add_argument("x", type=int)
    p.add_argument("p", type=_natural)
    p.add_argument("q", type=_natural)

    p = command("keygen", _cmd_keygen, "build a key pair from distinct primes p, q and exponent e")
    p.add_argument("--p", type=_natural, required=True)
    p.add_argument("--q", type=_natural, required=True)
    p.add_argument("--e", type=_natural, required=True)
    p.add_argument("--pub", metavar="PATH", help="write the public key file here")
    p.add_argument("--priv", metavar="PATH", help="write the private key file here")

    p = command("encrypt", _cmd_encrypt, "raise message values to the public exponent")
    p.add_argument("--key", metavar="PUBFILE", required=True)
    p.add_argument("--numbers", type=_vector, metavar="V1,V2,...")
    p.add_argument("text", nargs="?", help="message text (A-Z and space)")

    p = command("decrypt", _cmd_decrypt, "raise message values to the private exponent")
    p.add_argument("--key", metavar="PRIVFILE", required=True)
    p.add_argument("--text", action="store_true", help="decode the result to letters")
    p.add_argument("vector", type=_vector, nargs="?", metavar="V1,V2,...")

    p = command("sign", _cmd_sign, "raise message values to the private exponent")
    p.add_argument("--key", metavar="PRIVFILE", required=True)
    p.add_argument("--numbers", type=_vector, metavar="V1,V2,...")
    p.add_argument("text", nargs="?", help="message text (A-Z and space)")

    p = command("verify", _cmd_verify, "raise signed values to the public exponent")
    p.add_argument("--key", metavar="PUBFILE", required=True)
    p.add_argument("--text", action="store_true", help="decode the result to letters")
    p.add_argument("vector", type=_vector, nargs="?", metavar="V1,V2,...")

    p = command("suggest-primes", _cmd_suggest_primes, "primes in [lo, hi], by trial division")
    p.add_argument("lo", type=_natural)
    p.add_argument("hi", type=_natural)

    return parser


def run(argv, *, stdin=None, stdout=None, stderr=None) -> int:
    """Parse argv, dispatch, and return the exit code (0/1/2)."""
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as err:
        print(f"error: {err}", file=stderr)
        err.parser.print_help(stderr)
        return 1
    except SystemExit as exc:  # argparse --help
        return int(exc.code or 0)
    try:
        args.handler(args, stdin, stdout)
    except _UsageError as err:
        print(f"error: {err}", file=stderr)
        err.parser.print_help(stderr)
        return 1
    except (DomainError, ValueError) as err:
        print(f"error: {err}", file=stderr)
        return 2
    return 0


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
