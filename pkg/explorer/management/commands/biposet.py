# Copyright 2024 The biposets authors.
# All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License"); you may
# not use this file except in compliance with the License. You may obtain
# a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
# WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
# License for the specific language governing permissions and limitations
# under the License.


import os

from django.core.management.base import BaseCommand, CommandError, CommandParser

from explorer.constants import (
    ADJOINT_SIDES, COMPONENTS, DOT_COMPONENTS, EXIT_FAILS, EXIT_USAGE, GALOIS_MODES, VERDICTS
)
from explorer.converters.bpo import parse_structure, serialize_structure
from explorer.converters.dot import emit_dot
from explorer.converters.findings import dump_finding, load_finding, report_filename
from explorer.converters.mapping import parse_mapping, parse_pair, serialize_mapping, serialize_pair
from explorer.ds import BiPoset
from explorer.exceptions import BiPosetError
from explorer.managers.axioms import AxiomsManager
from explorer.managers.constructions import ConstructionsManager
from explorer.managers.extremal import ExtremalManager
from explorer.managers.galois import GaloisManager
from explorer.managers.morphisms import MorphismsManager
from explorer.managers.oracle import OracleManager


class SubcommandParser(CommandParser):
    """Argument errors exit with the usage code, also under call_command"""

    def error(self, message):
        if self.called_from_command_line:
            super().error(message)
        raise CommandError("Error: %s" % message, returncode=EXIT_USAGE)


class Command(BaseCommand):

    help = 'Check, build and explore finite binary posets.'

    axioms_manager = AxiomsManager()
    constructions_manager = ConstructionsManager()
    extremal_manager = ExtremalManager()
    morphisms_manager = MorphismsManager()
    galois_manager = GaloisManager()
    oracle_manager = OracleManager()

    def add_arguments(self, parser):
        commands = parser.add_subparsers(
            dest='subcommand', required=True, parser_class=SubcommandParser
        )

        def command(name, help_text, parent=commands):
            return parent.add_parser(
                name, help=help_text, called_from_command_line=parser.called_from_command_line
            )

        def out_option(sub, help_text='output file (default standard output)'):
            sub.add_argument('--out', default=None, help=help_text)

        sub = command('check', 'validate a structure against the three axioms')
        sub.add_argument('structure')

        sub = command('classical-check', 'check one component as a classical partial order')
        sub.add_argument('structure')
        sub.add_argument('--component', type=int, choices=COMPONENTS, default=COMPONENTS[0])

        sub = command('dual', 'write the dual structure')
        sub.add_argument('structure')
        out_option(sub)

        sub = command('intersect', 'write the component-wise intersection')
        sub.add_argument('structures', nargs='+')
        out_option(sub)

        for name, help_text in (('powerset', 'power set of k points under (subset, subset)'),
                                ('divisibility', '1..k under (<=, divides)')):
            sub = command(name, help_text)
            sub.add_argument('--k', type=int, required=True)
            out_option(sub)

        sub = command('extremal', 'sided and combined extremal elements')
        sub.add_argument('structure')

        sub = command('iso', 'check a mapping, or search one, as an isomorphism')
        sub.add_argument('source')
        sub.add_argument('target')
        sub.add_argument('--map', dest='mapping', default=None)

        sub = command('selfdual', 'search an isomorphism onto the dual')
        sub.add_argument('structure')

        galois = command('galois', 'Galois connections between two structures')
        actions = galois.add_subparsers(dest='galois_action', required=True, parser_class=SubcommandParser)
        sub = command('check', 'check a pair file (f: and g: lines)', parent=actions)
        sub.add_argument('P')
        sub.add_argument('Q')
        sub.add_argument('pair')
        sub.add_argument('--mode', choices=GALOIS_MODES, default=GALOIS_MODES[0])
        sub = command('adjoint', 'list every adjoint of a mapping', parent=actions)
        sub.add_argument('P')
        sub.add_argument('Q')
        sub.add_argument('mapping', help='P -> Q for --side right, Q -> P for --side left')
        sub.add_argument('--side', choices=ADJOINT_SIDES, default=ADJOINT_SIDES[0])
        sub.add_argument('--mode', choices=GALOIS_MODES, default=GALOIS_MODES[0])

        sub = command('enumerate', 'every binary poset on n elements')
        sub.add_argument('--n', type=int, required=True)
        out_option(sub, 'directory receiving one n<N>-<code>.bpo file per structure')

        sub = command('hunt', 'verify a registered claim on small models')
        sub.add_argument('claim')
        sub.add_argument('--n', type=int, required=True)
        sub.add_argument('--budget', type=int, default=None)
        sub.add_argument('--seed', type=int, default=None)
        sub.add_argument('--workers', type=int, default=None)
        out_option(sub, 'YAML report file, or a directory receiving <claim>-n<N>.yml (default standard output)')

        sub = command('replay', 're-check the witness recorded in a report')
        sub.add_argument('report')

        command('claims', 'list registered claims')

        sub = command('dot', 'Graphviz rendering of one or both components')
        sub.add_argument('structure')
        sub.add_argument('--component', choices=DOT_COMPONENTS, default=DOT_COMPONENTS[2])
        out_option(sub)

    def handle(self, *args, **options):
        name = options['subcommand']
        if name == 'galois':
            name = 'galois_%s' % options['galois_action']
        handler = getattr(self, 'handle_%s' % name.replace('-', '_'))
        try:
            handler(options)
        except BiPosetError as e:
            raise CommandError(str(e), returncode=EXIT_USAGE)

    # helpers

    @staticmethod
    def _read(path):
        try:
            with open(path, encoding='utf-8') as source:
                return source.read()
        except OSError as e:
            raise CommandError("cannot read %s: %s" % (path, e.strerror), returncode=EXIT_USAGE)
        except UnicodeDecodeError as e:
            raise CommandError("cannot read %s: not UTF-8 text (%s)" % (path, e.reason), returncode=EXIT_USAGE)

    def _structure(self, path, validate=True):
        bp = parse_structure(self._read(path))
        return self.axioms_manager.validate(bp) if validate else bp

    def _binary_poset(self, path):
        """Validated structure; anything failing an axiom is a usage error"""
        bp = self._structure(path)
        if not bp.certificate.passed:
            failed = ', '.join(result.name for result in bp.certificate.failures())
            raise CommandError("%s is not a binary poset (%s fails)" % (path, failed), returncode=EXIT_USAGE)
        return bp

    def _emit(self, text, out=None):
        if not out:
            self.stdout.write(text, ending='')
            return
        try:
            with open(out, 'w', encoding='utf-8') as target:
                target.write(text)
        except OSError as e:
            raise CommandError("cannot write %s: %s" % (out, e.strerror), returncode=EXIT_USAGE)

    @staticmethod
    def _labels(bp, indices):
        return ' '.join(bp.ground.labels[i] for i in indices)

    def _fail(self, message):
        raise CommandError(message, returncode=EXIT_FAILS)

    def _verdict_lines(self, bp, verdict):
        lines = []
        for result in verdict.results():
            if result.passed:
                lines.append("# %s: pass" % result.name)
                continue
            line = "# %s: fail at %s" % (result.name, self._labels(bp, result.witness))
            if result.detail:
                line += " (%s)" % result.detail
            lines.append(line)
        return '\n'.join(lines) + '\n'

    # subcommands

    def handle_check(self, options):
        bp = self._structure(options['structure'])
        verdict = bp.certificate
        if verdict.passed:
            self._emit(self._verdict_lines(bp, verdict))
            return
        self._emit(self._verdict_lines(bp, verdict) + serialize_structure(bp))
        self._fail("%s is not a binary poset" % options['structure'])

    def handle_classical_check(self, options):
        bp = self._structure(options['structure'], validate=False)
        component = options['component']
        verdict = self.axioms_manager.check_classical_por(bp.d.r1 if component == 1 else bp.d.r2)
        self._emit(self._verdict_lines(bp, verdict))
        if not verdict.passed:
            self._emit(serialize_structure(bp))
            self._fail("component %i is not a partial order" % component)

    def handle_dual(self, options):
        bp = self._structure(options['structure'], validate=False)
        self._emit(serialize_structure(self.constructions_manager.dual_biposet(bp)), options['out'])

    def handle_intersect(self, options):
        structures = [self._structure(path, validate=False) for path in options['structures']]
        ground = structures[0].ground
        for path, bp in zip(options['structures'][1:], structures[1:]):
            if bp.ground != ground:
                raise CommandError("%s declares elements %s, expected %s" % (
                    path, ' '.join(bp.ground.labels), ' '.join(ground.labels)), returncode=EXIT_USAGE)
        d = self.constructions_manager.intersect_many([bp.d for bp in structures])
        self._emit(serialize_structure(structures[0].with_diamond(d)), options['out'])

    def handle_powerset(self, options):
        bp = self.constructions_manager.powerset_biposet(options['k'])
        self._emit(serialize_structure(bp, comment="power set of %i points" % options['k']), options['out'])

    def handle_divisibility(self, options):
        bp = self.constructions_manager.divisibility_biposet(options['k'])
        self._emit(serialize_structure(bp, comment="1..%i under (<=, divides)" % options['k']), options['out'])

    def handle_extremal(self, options):
        bp = self._structure(options['structure'])
        report = self.extremal_manager.extremal_report(bp)
        lines = []
        for name in ('x', 'y', 'u', 'v', 'g_max', 'g_min', 'l_max', 'l_min'):
            value = getattr(report, name)
            lines.append("%s: %s" % (name, '-' if value is None else bp.ground.labels[value]))
        lines.append("bounded: %s" % ('yes' if report.bounded else 'no'))
        lines.extend("# note: %s" % note for note in report.notes)
        lines.extend("# anomaly: %s" % anomaly for anomaly in report.anomalies)
        self._emit('\n'.join(lines) + '\n')
        if not report.bounded:
            self._fail("%s is unbounded" % options['structure'])

    def handle_iso(self, options):
        src = self._binary_poset(options['source'])
        dst = self._binary_poset(options['target'])
        if options['mapping']:
            f = parse_mapping(self._read(options['mapping']), src.ground, dst.ground)
            verdict = self.morphisms_manager.is_isomorphism(f, src, dst)
            if verdict.holds:
                self._emit("# isomorphism\n")
                return
            detail = verdict.reason
            if verdict.witness is not None:
                detail += " at %s" % self._labels(src, verdict.witness)
            self._emit("# %s\n" % detail + serialize_mapping(f, src.ground, dst.ground))
            self._fail("mapping is not an isomorphism")
        f = self.morphisms_manager.find_isomorphism(src, dst)
        if f is None:
            self._emit("# no isomorphism\n")
            self._fail("structures are not isomorphic")
        self._emit(serialize_mapping(f, src.ground, dst.ground))

    def handle_selfdual(self, options):
        bp = self._binary_poset(options['structure'])
        psi = self.morphisms_manager.self_dual_witness(bp)
        if psi is None:
            self._emit("# not self-dual\n")
            self._fail("no isomorphism onto the dual")
        self._emit("# isomorphism onto the dual\n" + serialize_mapping(psi, bp.ground, bp.ground))

    def handle_galois_check(self, options):
        P, Q = self._binary_poset(options['P']), self._binary_poset(options['Q'])
        pair = parse_pair(self._read(options['pair']), P, Q)
        verdict = self.galois_manager.is_galois(pair, P, Q, options['mode'])
        if not verdict.holds:
            a, b = verdict.witness
            self._emit("# %s at a=%s b=%s\n" % (verdict.reason, P.ground.labels[a], Q.ground.labels[b])
                       + serialize_pair(pair, P, Q))
            self._fail("pair is not a %s Galois connection" % options['mode'])
        report = self.galois_manager.check_adjoint_properties(pair, P, Q)
        lines = ["# %s Galois connection" % options['mode']]
        lines.extend("%s: %s" % (key, 'yes' if value else 'no') for key, value in report.as_dict().items())
        self._emit('\n'.join(lines) + '\n')

    def handle_galois_adjoint(self, options):
        P, Q = self._binary_poset(options['P']), self._binary_poset(options['Q'])
        side = options['side']
        if side == ADJOINT_SIDES[0]:
            f = parse_mapping(self._read(options['mapping']), P.ground, Q.ground)
            src, dst = Q.ground, P.ground
        else:
            f = parse_mapping(self._read(options['mapping']), Q.ground, P.ground)
            src, dst = P.ground, Q.ground
        adjoints = self.galois_manager.find_adjoint(f, P, Q, side, options['mode'])
        if not adjoints:
            self._emit("# no %s adjoint\n" % side)
            self._fail("mapping has no %s adjoint" % side)
        self._emit(''.join("# %s adjoint %i of %i\n%s" % (side, i, len(adjoints), serialize_mapping(g, src, dst))
                           for i, g in enumerate(adjoints, start=1)))

    def handle_enumerate(self, options):
        n, out = options['n'], options['out']
        if out:
            os.makedirs(out, exist_ok=True)
        count = 0
        for d in self.oracle_manager.enumerate_biposets(n):
            count += 1
            if out:
                bp = BiPoset.unlabeled(d)
                self._emit(serialize_structure(bp), os.path.join(out, 'n%i-%i.bpo' % (n, d.code)))
            else:
                self._emit("%i\n" % d.code)
        self._emit("# %i binary posets on %i elements\n" % (count, n))

    def handle_hunt(self, options):
        finding = self.oracle_manager.verify_claim(
            options['claim'], options['n'], budget=options['budget'],
            seed=options['seed'], workers=options['workers'],
        )
        report, out = dump_finding(finding), options['out']
        if out and (os.path.isdir(out) or out.endswith(os.sep)):
            os.makedirs(out, exist_ok=True)
            out = os.path.join(out, report_filename(finding))
        self._emit(report, out)
        if finding.verdict != VERDICTS[0]:
            if out:
                # a refuting report always reaches standard output
                self._emit(report)
            self._fail("%s refuted at n_max=%i" % (finding.claim, finding.scale['n_max']))

    def handle_replay(self, options):
        finding = load_finding(self._read(options['report']))
        if self.oracle_manager.replay_finding(finding):
            self._emit("# witness for %s reproduces\n" % finding.claim)
            return
        self._emit("# witness for %s does not reproduce\n" % finding.claim)
        self._fail("recorded witness no longer exhibits the claim")

    def handle_claims(self, options):
        mapper = self.oracle_manager.claim_mapper
        lines = []
        for claim_id in mapper.claim_ids():
            claim = mapper.get(claim_id)
            kind = 'existential' if claim.existential else 'universal'
            lines.append("%s\t%s\t%s" % (claim_id, kind, claim.anchor))
        self._emit('\n'.join(lines) + '\n')

    def handle_dot(self, options):
        bp = self._binary_poset(options['structure'])
        self._emit(emit_dot(bp, options['component']), options['out'])
