#!/usr/bin/env python3
# vim: ts=4:sw=4:expandtab

# weylharm
# Copyright (C) 2026 The weylharm developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""
Command line interface
"""

from weylharm import APP_VERSION, ExpressionSyntaxError, WeylharmError, DomainError, _
from weylharm import Codec, General, SystemInformation
from weylharm.Cellular import cellular_decompose
from weylharm.Expression import parse_op, parse_poly
from weylharm.Harmonic import (GammaHarmonicCoefficients, almansi_decompose,
                               gamma_harmonic_from_coeffs, gamma_harmonic_to_coeffs,
                               polyharmonic_order)
from weylharm.Hypergeometric import o_basis
from weylharm.InnerProduct import l2_disc_inner_product, module_inner_product
from weylharm.Invariance import (factor_invariant_basis_element, is_rotation_invariant,
                                 require_invariant, rewrite_in_generators)
from weylharm.Log import add_file_handler, set_root_log_level
from weylharm.Options import options
from weylharm.Reduction import kernel_bounded, lambda_m, projector_as_operator
from weylharm.Scalar import format_scalar, parse_scalar
from weylharm.Weyl import weyl2_apply

import logging
import optparse
import sys
from collections import namedtuple

logger = logging.getLogger(__name__)


class UsageError(WeylharmError):

    """Bad command, flag or argument count"""

    kind = 'usage'


class _OptionParser(optparse.OptionParser):

    """OptionParser that raises instead of exiting"""

    def error(self, msg):
        raise UsageError(msg)

    def _process_short_opts(self, rargs, values):
        # -z, -1/2*zb and the like are expressions, not flags
        if rargs[0][:2] not in self._short_opt:
            self.largs.append(rargs.pop(0))
            return
        optparse.OptionParser._process_short_opts(self, rargs, values)


CommandSpec = namedtuple('CommandSpec', ['name', 'n_args', 'flags', 'required', 'handler'])

# flags that belong to particular commands
COMMAND_FLAGS = ('m', 'max_deg', 'set', 'pick', 'g1', 'g2', 'coeffs', 'l2', 'n')


class Argument:

    """Positional expressions, with '-' read from standard input once"""

    def __init__(self, args):
        self.args = args
        self.stdin_text = None

    def __getitem__(self, index):
        arg = self.args[index]
        if '-' != arg:
            return arg
        if self.stdin_text is None:
            self.stdin_text = sys.stdin.read().strip()
        return self.stdin_text


#
# commands; each returns (text, JSON object)
#
def cmd_normalize(values, args):
    D = parse_op(args[0])
    return str(D), Codec.encode_terms(D)


def cmd_invariant(values, args):
    result = is_rotation_invariant(parse_op(args[0]))
    return ('true' if result else 'false'), {'invariant': result}


def cmd_factor(values, args):
    D = parse_op(args[0])
    require_invariant(D)
    lines = []
    terms = []
    for key, c in D.items():
        word = factor_invariant_basis_element(key)
        lines.append('%s * %s' % (format_scalar(c), word))
        terms.append({'exponents': list(key), 'c': Codec.encode_scalar(c),
                      'word': dict(word._asdict())})
    return '\n'.join(lines), {'terms': terms}


def cmd_generators(values, args):
    expression = rewrite_in_generators(parse_op(args[0]))
    return str(expression), Codec.encode_generator_expression(expression)


def cmd_reduce(values, args):
    T = lambda_m(parse_op(args[0]), values.m)
    return str(T), Codec.encode_terms(T)


def cmd_apply(values, args):
    p = weyl2_apply(parse_op(args[0]), parse_poly(args[1]))
    return str(p), Codec.encode_terms(p)


def _parse_int_list(text):
    try:
        return [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise UsageError(_('expected comma separated integers, got %r') % text)


def cmd_project(values, args):
    projector = projector_as_operator(_parse_int_list(values.set), values.pick)
    p = weyl2_apply(projector, parse_poly(args[0]))
    return str(p), Codec.encode_terms(p)


def cmd_kernel(values, args):
    max_degree = values.max_deg
    if max_degree is None:
        max_degree = options.get('kernel_max_degree')
    if max_degree < 0:
        raise DomainError('--max-deg must not be negative')
    basis = kernel_bounded(parse_op(args[0]), max_degree)
    return '\n'.join(str(p) for p in basis), {'basis': [Codec.encode_terms(p) for p in basis]}


def cmd_order(values, args):
    n = polyharmonic_order(parse_poly(args[0]))
    return str(n), {'order': n}


def cmd_almansi(values, args):
    decomposition = almansi_decompose(parse_poly(args[0]))
    lines = ['q%d = %s' % (j, q) for j, q in enumerate(decomposition.layers)]
    return '\n'.join(lines), Codec.encode_almansi(decomposition)


def cmd_cellular(values, args):
    decomposition = cellular_decompose(parse_poly(args[0]), values.n)
    lines = ['order %d' % decomposition.order]
    lines += ['w%d = %s' % (j, w) for j, w in enumerate(decomposition.layers)]
    lines += ['k[m=%d,j=%d] = %s' % (m, j, format_scalar(c))
              for (m, j, c) in decomposition.coefficient_rows()]
    return '\n'.join(lines), Codec.encode_cellular(decomposition)


def _parse_coefficient_map(text):
    """'1:1,-2:3/2' to {1: 1, -2: 3/2}"""
    coeffs = {}
    offset = 0
    for part in text.split(','):
        if part.strip():
            if ':' not in part:
                raise ExpressionSyntaxError('expected m:c', offset, text)
            m_text, c_text = part.split(':', 1)
            try:
                m = int(m_text)
            except ValueError:
                raise ExpressionSyntaxError('invalid integer %r' % m_text, offset, text)
            if m in coeffs:
                raise ExpressionSyntaxError('repeated m=%d' % m, offset, text)
            coeffs[m] = parse_scalar(c_text)
        offset += len(part) + 1
    return coeffs


def cmd_gamma_expand(values, args):
    g = GammaHarmonicCoefficients(parse_scalar(values.g1), parse_scalar(values.g2),
                                  _parse_coefficient_map(values.coeffs))
    p = gamma_harmonic_from_coeffs(g)
    return str(p), Codec.encode_terms(p)


def cmd_gamma_coeffs(values, args):
    g = gamma_harmonic_to_coeffs(parse_poly(args[0]), parse_scalar(values.g1),
                                 parse_scalar(values.g2))
    lines = ['c[%d] = %s' % (m, format_scalar(c)) for m, c in sorted(g.coeffs.items())]
    return '\n'.join(lines), Codec.encode_gamma_coefficients(g)


def cmd_inner(values, args):
    p = parse_poly(args[0])
    q = parse_poly(args[1])
    if values.l2:
        value = l2_disc_inner_product(p, q)
        return format_scalar(value), {'inner': Codec.encode_scalar(value)}
    value = module_inner_product(p, q)
    return str(value), {'inner': Codec.encode_terms(value)}


def cmd_obasis(values, args):
    if values.m < 0 or values.n < 0:
        raise DomainError('--m and --n must be natural numbers')
    basis = o_basis(values.m, values.n)
    lines = ['O%d = %s' % (l, poly) for l, poly in enumerate(basis.polys)]
    return '\n'.join(lines), {'m': basis.m, 'n': basis.n,
                              'polys': [Codec.encode_terms(poly) for poly in basis.polys]}


COMMANDS = dict((command.name, command) for command in (
    CommandSpec('normalize', 1, (), (), cmd_normalize),
    CommandSpec('invariant', 1, (), (), cmd_invariant),
    CommandSpec('factor', 1, (), (), cmd_factor),
    CommandSpec('generators', 1, (), (), cmd_generators),
    CommandSpec('reduce', 1, ('m',), ('m',), cmd_reduce),
    CommandSpec('apply', 2, (), (), cmd_apply),
    CommandSpec('project', 1, ('set', 'pick'), ('set', 'pick'), cmd_project),
    CommandSpec('kernel', 1, ('max_deg',), (), cmd_kernel),
    CommandSpec('order', 1, (), (), cmd_order),
    CommandSpec('almansi', 1, (), (), cmd_almansi),
    CommandSpec('cellular', 1, ('n',), (), cmd_cellular),
    CommandSpec('gamma-expand', 0, ('g1', 'g2', 'coeffs'), ('g1', 'g2', 'coeffs'), cmd_gamma_expand),
    CommandSpec('gamma-coeffs', 1, ('g1', 'g2'), ('g1', 'g2'), cmd_gamma_coeffs),
    CommandSpec('inner', 2, ('l2',), (), cmd_inner),
    CommandSpec('obasis', 0, ('m', 'n'), ('m', 'n'), cmd_obasis),
))


def build_parser():
    usage = _("usage: %prog [options] command expression...")
    epilog = _("Commands: ") + ', '.join(sorted(COMMANDS))
    parser = _OptionParser(usage, epilog=epilog)
    parser.add_option('--m', type='int', help=_("component index"))
    parser.add_option('--max-deg', dest='max_deg', type='int',
                      help=_("degree bound for kernel"))
    parser.add_option('--set', help=_("comma separated component indices for project"))
    parser.add_option('--pick', type='int', help=_("component kept by project"))
    parser.add_option('--g1', help=_("first parameter of L"))
    parser.add_option('--g2', help=_("second parameter of L"))
    parser.add_option('--coeffs', help=_("coefficients as m:c,m:c"))
    parser.add_option('--l2', action='store_true', help=_("use the disc inner product"))
    parser.add_option('--n', type='int', help=_("degree bound or order"))
    parser.add_option('--json', action='store_true', help=_("write JSON"))
    parser.add_option(
        '--debug', help=_("set log level to verbose"), action="store_true")
    parser.add_option('--debug-log', help=_("log debug messages to file"))
    parser.add_option("--sysinfo", action="store_true",
                      help=_("show system information"))
    parser.add_option("-v", "--version", action="store_true",
                      help=_("output version information and exit"))
    return parser


def use_json(values):
    """--json beats WEYLHARM_JSON, which beats the options file"""
    if values.json:
        return True
    from_env = General.env_flag('WEYLHARM_JSON')
    if from_env is not None:
        return from_env
    return options.get('json')


def check_command(values, args):
    """Return the CommandSpec and the positional expressions"""
    if not args:
        raise UsageError(_('no command given'))
    name = args[0]
    if name not in COMMANDS:
        raise UsageError(_('unknown command %r') % name)
    command = COMMANDS[name]
    for flag in COMMAND_FLAGS:
        value = getattr(values, flag)
        if value is not None and value is not False and flag not in command.flags:
            raise UsageError(_('--%s does not apply to %s') % (flag.replace('_', '-'), name))
    for flag in command.required:
        if getattr(values, flag) is None:
            raise UsageError(_('%s needs --%s') % (name, flag.replace('_', '-')))
    if len(args) - 1 != command.n_args:
        raise UsageError(_('%s takes %d expression(s), got %d') % (name, command.n_args, len(args) - 1))
    return command, Argument(args[1:])


def report(error):
    sys.stderr.write('error:%s: %s\n' % (error.kind, error))


def run_command(argv):
    """Run one command and return the exit code"""
    parser = build_parser()
    try:
        (values, args) = parser.parse_args(argv)
    except UsageError as e:
        report(e)
        return 2
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else 0

    if values.debug or options.get('debug'):
        set_root_log_level(True)
    if values.debug_log:
        add_file_handler(values.debug_log)
        logger.info(SystemInformation.get_system_information())
    if values.version:
        print("""
weylharm version %s
License GPLv3+: GNU GPL version 3 or later <http://gnu.org/licenses/gpl.html>.
This is free software: you are free to change and redistribute it.
There is NO WARRANTY, to the extent permitted by law.""" % APP_VERSION)
        return 0
    if values.sysinfo:
        print(SystemInformation.get_system_information())
        return 0

    try:
        command, expressions = check_command(values, args)
        logger.debug('running command %s', command.name)
        text, obj = command.handler(values, expressions)
    except (ExpressionSyntaxError, UsageError) as e:
        report(e)
        return 2
    except WeylharmError as e:
        report(e)
        return 1
    except Exception as e:
        logger.exception('unexpected error in: %s', ' '.join(args))
        sys.stderr.write('error:internal: %s\n' % (e,))
        return 1
    if use_json(values):
        sys.stdout.write(Codec.dumps(obj) + '\n')
    elif text:
        sys.stdout.write(text + '\n')
    return 0


def process_cmd_line(argv=None):
    """Parse the command line and execute the given command."""
    if argv is None:
        argv = sys.argv[1:]
    sys.exit(run_command(argv))


if __name__ == '__main__':
    process_cmd_line()
