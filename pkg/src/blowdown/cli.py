"""
Command line front end.

    blowdown trace  --p 9 --q 2 [--format text|json]
    blowdown verify --p-max 300 [--p-min 2] [--parallel N] [--orientation-insensitive]
    blowdown expand --p 81 --q 17
    blowdown emit   --p 9 --q 2 --format json|dot

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

import argparse
import sys

from .arith import ncf_expand
from .report import pair_record, render_trace, to_dot, to_json
from .verify import verify_range


def _parser():
    parser = argparse.ArgumentParser(prog='blowdown')
    sub = parser.add_subparsers(dest='command', required=True)

    trace = sub.add_parser('trace', help='print the full Euclidean and blow-up trace')
    trace.add_argument('--p', type=int, required=True)
    trace.add_argument('--q', type=int, required=True)
    trace.add_argument('--format', choices=['text', 'json'], default='text')

    verify = sub.add_parser('verify', help='check all properties over a range of p')
    verify.add_argument('--p-max', type=int, required=True)
    verify.add_argument('--p-min', type=int, default=2)
    verify.add_argument('--parallel', type=int, default=1)
    verify.add_argument('--orientation-insensitive', action='store_true')

    expand = sub.add_parser('expand', help='negative continued fraction of P/Q')
    expand.add_argument('--p', type=int, required=True, help='numerator P')
    expand.add_argument('--q', type=int, required=True, help='denominator Q')

    emit = sub.add_parser('emit', help='machine-readable record or DOT graph')
    emit.add_argument('--p', type=int, required=True)
    emit.add_argument('--q', type=int, required=True)
    emit.add_argument('--format', default='json')
    return parser


def main(argv=None):
    parser = _parser()
    args = parser.parse_args(argv)
    try:
        if args.command == 'trace':
            if args.format == 'json':
                print(to_json(pair_record(args.p, args.q)))
            else:
                sys.stdout.write(render_trace(args.p, args.q))
        elif args.command == 'expand':
            print('[' + ','.join(map(str, ncf_expand(args.p, args.q))) + ']')
        elif args.command == 'emit':
            if args.format == 'json':
                print(to_json(pair_record(args.p, args.q)))
            elif args.format == 'dot':
                sys.stdout.write(to_dot(args.p, args.q))
            else:
                print(f'blowdown: unknown format {args.format!r}', file=sys.stderr)
                return 2
        elif args.command == 'verify':
            if args.parallel < 1:
                raise ValueError('--parallel must be >= 1')
            report = verify_range(args.p_max, args.p_min, args.parallel,
                                  args.orientation_insensitive)
            print(report.summary())
            return 0 if report.ok else 1
    except ValueError as exc:
        print(f'blowdown: {exc}', file=sys.stderr)
        return 2
    return 0


if __name__ == '__main__':
    sys.exit(main())
