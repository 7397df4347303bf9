# Copyright 2026 The qecc1wqc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Generates the lattice schedule files in schedules/.

A layout is a sequence of global-CZ layers.  Every cell is inactive, data, or ancilla during a
layer.  Along each axis line, maximal runs of active cells form segments.  Two data cells
separated by an even ancilla run (possibly empty) are linked by a CZ up to a Pauli byproduct.
An ancilla run of length k hanging off a data cell and ending at an inactive cell relocates the
data qubit k cells by X-measurement teleportation, applying H^k; odd relocations are followed
by a local H on the new cell.  Odd ancilla runs between two data cells are forbidden.

Some layouts are written by hand; the rest are found with a SAT model of these rules.

Usage: gen_schedules.py [--out DIR] [--only NAME ...]
"""

import argparse
import itertools
import json
import os
import sys

from pysat.card import CardEnc, EncType
from pysat.formula import CNF, IDPool
from pysat.solvers import Cadical153

DIRS = {'V': (1, 0), 'H': (0, 1)}


class Synth:
    """SAT model of a layered layout.

    qubits: labels; born: label -> first layer in which the qubit exists; fixed: label -> cell
    at birth; pinned: label -> cell for the whole run (no relocation, no links unless required).
    """

    def __init__(self, rows, cols, axes, qubits, born, lmax=5, kmax=4, fixed=None, pinned=None):
        self.R, self.C = rows, cols
        self.axes = list(axes)
        self.n = len(axes)
        self.qubits = list(qubits)
        self.born = dict(born)
        self.lmax, self.kmax = lmax, kmax
        self.pool = IDPool()
        self.cnf = CNF()
        self.cells = [(r, c) for r in range(rows) for c in range(cols)]
        self.reqs = {}
        self.fixed = dict(fixed or {})
        self.pinned = dict(pinned or {})
        self.cycle_info = []

    def v(self, *key):
        return self.pool.id(key)

    def occ(self, q, t, c):
        return self.v('occ', q, t, c)

    def D(self, t, c):
        return self.v('D', t, c)

    def A(self, t, c):
        return self.v('A', t, c)

    def add(self, cl):
        self.cnf.append(cl)

    def exactly_one(self, lits):
        self.cnf.extend(CardEnc.equals(lits=lits, bound=1, vpool=self.pool, encoding=EncType.seqcounter).clauses)

    def at_most(self, lits, k):
        if len(lits) > k:
            self.cnf.extend(CardEnc.atmost(lits=lits, bound=k, vpool=self.pool, encoding=EncType.seqcounter).clauses)

    def inside(self, c):
        return 0 <= c[0] < self.R and 0 <= c[1] < self.C

    def require(self, u, v, lo, hi, count=1):
        self.reqs.setdefault(tuple(sorted((u, v))), []).append((lo, hi, count))

    def alive(self, q, t):
        return self.born[q] <= t

    def build(self):
        n = self.n
        for q in self.qubits:
            for t in range(self.born[q], n + 2):
                self.exactly_one([self.occ(q, t, c) for c in self.cells])
                if q in self.pinned:
                    self.add([self.occ(q, t, self.pinned[q])])
            if q in self.fixed:
                self.add([self.occ(q, self.born[q], self.fixed[q])])
        for t in range(1, n + 2):
            for c in self.cells:
                lits = [self.occ(q, t, c) for q in self.qubits if self.alive(q, t)]
                self.at_most(lits, 1)
                d = self.D(t, c)
                self.add([-d] + lits)
                for lit in lits:
                    self.add([-lit, d])
        for t in range(1, n + 1):
            for c in self.cells:
                self.add([-self.D(t, c), -self.A(t, c)])
        self.links = {}
        for t in range(1, n + 1):
            self.build_layer(t)
        self.build_edges()

    def build_layer(self, t):
        dr, dc = DIRS[self.axes[t - 1]]
        links = []
        for c in self.cells:
            for k in range(1, max(self.R, self.C)):
                c2 = (c[0] + dr * k, c[1] + dc * k)
                if not self.inside(c2):
                    break
                between = [(c[0] + dr * m, c[1] + dc * m) for m in range(1, k)]
                body = [self.D(t, c), self.D(t, c2)] + [self.A(t, b) for b in between]
                if k % 2 == 0 or k > self.lmax:
                    self.add([-x for x in body])
                else:
                    L = self.v('L', t, c, c2)
                    for x in body:
                        self.add([-L, x])
                    self.add([L] + [-x for x in body])
                    links.append((L, c, c2))
            moves = []
            for sgn in (1, -1):
                run = []
                for k in range(1, max(self.R, self.C)):
                    cc = (c[0] + sgn * dr * k, c[1] + sgn * dc * k)
                    if not self.inside(cc):
                        break
                    run.append(cc)
                # Dangling runs longer than kmax are forbidden.
                for k in range(self.kmax + 1, len(run) + 1):
                    body = [-self.D(t, c)] + [-self.A(t, x) for x in run[:k]]
                    if k < len(run):
                        body += [self.D(t, run[k]), self.A(t, run[k])]
                    self.add(body)
                for k in range(1, min(self.kmax, len(run)) + 1):
                    body = [self.D(t, c)] + [self.A(t, x) for x in run[:k]]
                    end = (c[0] + sgn * dr * (k + 1), c[1] + sgn * dc * (k + 1))
                    M = self.v('M', t, c, sgn, k)
                    for x in body:
                        self.add([-M, x])
                    if self.inside(end):
                        self.add([-M, -self.D(t, end)])
                        self.add([-M, -self.A(t, end)])
                        self.add([M] + [-x for x in body] + [self.D(t, end), self.A(t, end)])
                    else:
                        self.add([M] + [-x for x in body])
                    moves.append((M, sgn, k, run[k - 1]))
            self.at_most([m[0] for m in moves], 1)
            any_move = self.v('anyM', t, c)
            self.add([-any_move] + [m[0] for m in moves])
            for m in moves:
                self.add([-m[0], any_move])
            for q in self.qubits:
                if not self.alive(q, t):
                    continue
                o = self.occ(q, t, c)
                for M, sgn, k, dst in moves:
                    self.add([-o, -M, self.occ(q, t + 1, dst)])
                self.add([-o, any_move, self.occ(q, t + 1, c)])
            # Every ancilla cell sits in a run attached to a data cell.
            supp = []
            for sgn in (1, -1):
                for k in range(1, self.kmax + 2):
                    cc = (c[0] + sgn * dr * k, c[1] + sgn * dc * k)
                    if not self.inside(cc):
                        break
                    between = [(c[0] + sgn * dr * m, c[1] + sgn * dc * m) for m in range(1, k)]
                    s = self.v('supp', t, c, sgn, k)
                    self.add([-s, self.D(t, cc)])
                    for b in between:
                        self.add([-s, self.A(t, b)])
                    supp.append(s)
            self.add([-self.A(t, c)] + supp)
        self.links[t] = links

    def build_edges(self):
        for t in range(1, self.n + 1):
            for (u, w) in itertools.combinations(self.qubits, 2):
                if not (self.alive(u, t) and self.alive(w, t)):
                    continue
                key = (u, w)
                allowed = any(lo <= t <= hi for lo, hi, _ in self.reqs.get(key, []))
                E = self.v('E', t, key)
                if not allowed:
                    for L, c1, c2 in self.links[t]:
                        self.add([-L, -self.occ(u, t, c1), -self.occ(w, t, c2)])
                        self.add([-L, -self.occ(w, t, c1), -self.occ(u, t, c2)])
                    self.add([-E])
                    continue
                zs = []
                for L, c1, c2 in self.links[t]:
                    for a, b in ((u, w), (w, u)):
                        z = self.v('Z', t, key, c1, c2, a)
                        self.add([-z, L])
                        self.add([-z, self.occ(a, t, c1)])
                        self.add([-z, self.occ(b, t, c2)])
                        self.add([z, -L, -self.occ(a, t, c1), -self.occ(b, t, c2)])
                        zs.append(z)
                self.add([-E] + zs)
                for z in zs:
                    self.add([-z, E])
        for key, windows in self.reqs.items():
            for lo, hi, count in windows:
                lits = [self.v('E', t, key) for t in range(lo, hi + 1)
                        if self.alive(key[0], t) and self.alive(key[1], t)]
                if isinstance(count, tuple):
                    self.at_most(lits, 1)
                    sel = count[1]
                    self.add([-sel] + lits)
                    for lit in lits:
                        self.add([sel, -lit])
                else:
                    self.cnf.extend(CardEnc.equals(lits=lits, bound=count, vpool=self.pool,
                                                   encoding=EncType.seqcounter).clauses)
        for q in self.pinned:
            for t in range(self.born[q], self.n + 1):
                self.add([-self.v('anyM', t, self.pinned[q])])

    def choose_cycle(self, nodes, lo, hi):
        """Links the nodes along one solver-chosen 5-cycle within layers lo..hi."""
        first = nodes[0]
        cycles = [(first,) + p for p in itertools.permutations(nodes[1:]) if p[0] < p[-1]]
        sels = [self.v('cyc', tuple(nodes), i) for i in range(len(cycles))]
        self.exactly_one(sels)
        for (u, w) in itertools.combinations(nodes, 2):
            key = tuple(sorted((u, w)))
            inc = self.v('inC', tuple(nodes), key)
            users = [sels[i] for i, cy in enumerate(cycles)
                     if any(tuple(sorted((cy[j], cy[(j + 1) % len(cy)]))) == key for j in range(len(cy)))]
            self.add([-inc] + users)
            for s in users:
                self.add([-s, inc])
            self.reqs.setdefault(key, []).append((lo, hi, ('sel', inc)))
        self.cycle_info.append((tuple(nodes), cycles, sels))

    def separate(self, regions, t_from, t_to):
        """Ancilla cells serving different regions in layers t_from..t_to are disjoint."""
        names = sorted(set(regions.values()))
        for c in self.cells:
            self.at_most([self.v('reg', r, c) for r in names], 1)
        for t in range(t_from, t_to + 1):
            dr, dc = DIRS[self.axes[t - 1]]
            for c in self.cells:
                for sgn in (1, -1):
                    for k in range(1, self.kmax + 2):
                        cc = (c[0] + sgn * dr * k, c[1] + sgn * dc * k)
                        if not self.inside(cc):
                            break
                        sup = self.pool.obj2id.get(('supp', t, c, sgn, k))
                        if sup is None:
                            continue
                        for q, r in regions.items():
                            if self.alive(q, t):
                                self.add([-sup, -self.occ(q, t, cc), self.v('reg', r, c)])

    def solve(self, extra=None):
        self.build()
        if extra:
            extra(self)
        with Cadical153(bootstrap_with=self.cnf.clauses) as s:
            if not s.solve():
                return None
            model = set(lit for lit in s.get_model() if lit > 0)
        pos = {}
        for q in self.qubits:
            for t in range(self.born[q], self.n + 2):
                for c in self.cells:
                    if self.occ(q, t, c) in model:
                        pos[(q, t)] = c
        layers = []
        for t in range(1, self.n + 1):
            anc = [c for c in self.cells if self.A(t, c) in model]
            moves = [(q, pos[(q, t)], pos[(q, t + 1)]) for q in self.qubits
                     if self.alive(q, t) and pos[(q, t)] != pos[(q, t + 1)]]
            layers.append({'axis': self.axes[t - 1], 'ancillas': anc, 'moves': moves})
        cycles = []
        for nodes, cyc, sels in self.cycle_info:
            cycles.extend(cyc[i] for i, s in enumerate(sels) if s in model)
        return {'pos': pos, 'layers': layers, 'cycles': cycles}


# ---------------------------------------------------------------------------------------------
# Layouts

class Layout:
    """Layered layout with qubit births, relocations and local gates keyed by label."""

    def __init__(self, name, rows, cols):
        self.name = name
        self.rows, self.cols = rows, cols
        self.qubits = {}  # label -> (cell, init, born)
        self.layers = []  # dict(axis, ancillas, moves, pre, post)
        self.final = []
        self.target = None
        self.regions = None

    def qubit(self, label, cell, init, born=1):
        self.qubits[label] = (tuple(cell), init, born)

    def layer(self, axis, ancillas=(), moves=(), pre=(), post=()):
        self.layers.append({'axis': axis, 'ancillas': [tuple(c) for c in ancillas],
                            'moves': [(q, tuple(a), tuple(b)) for q, a, b in moves],
                            'pre': list(pre), 'post': list(post)})

    def relabeled(self, mapping):
        out = Layout(self.name, self.rows, self.cols)
        out.qubits = {mapping.get(q, q): v for q, v in self.qubits.items()}
        out.layers = [{**L, 'moves': [(mapping.get(q, q), a, b) for q, a, b in L['moves']],
                       'pre': [(mapping.get(q, q), g) for q, g in L['pre']],
                       'post': [(mapping.get(q, q), g) for q, g in L['post']]} for L in self.layers]
        out.final = [(mapping.get(q, q), g) for q, g in self.final]
        return out


def layout_from_solution(name, rows, cols, sol, inits, born):
    lay = Layout(name, rows, cols)
    for q, init in inits.items():
        lay.qubit(q, sol['pos'][(q, born[q])], init, born[q])
    for L in sol['layers']:
        lay.layer(L['axis'], L['ancillas'], L['moves'])
    return lay


def segments(active, rows, cols, axis):
    dr, dc = DIRS[axis]
    lines = range(cols) if axis == 'V' else range(rows)
    length = rows if axis == 'V' else cols
    for a in lines:
        run = []
        for b in range(length + 1):
            cell = (b, a) if axis == 'V' else (a, b)
            if b < length and cell in active:
                run.append(cell)
            elif run:
                yield run
                run = []


def check_layout(lay):
    """Replays the layout symbolically; returns the links made in each layer."""
    pos = {}
    history = []
    for t, L in enumerate(lay.layers, start=1):
        for q, (cell, init, born) in lay.qubits.items():
            if born == t:
                if cell in pos.values():
                    raise ValueError(f'{lay.name}: birth cell {cell} of {q} is occupied')
                pos[q] = cell
        at = {c: q for q, c in pos.items()}
        anc = set(L['ancillas'])
        if anc & set(at):
            raise ValueError(f'{lay.name}: layer {t} ancilla on a data cell')
        links, moves = [], {}
        for seg in segments(anc | set(at), lay.rows, lay.cols, L['axis']):
            data_idx = [i for i, c in enumerate(seg) if c in at]
            if not data_idx:
                raise ValueError(f'{lay.name}: layer {t} ancilla run {seg} touches no data')
            for i, j in zip(data_idx, data_idx[1:]):
                if (j - i - 1) % 2:
                    raise ValueError(f'{lay.name}: layer {t} odd run between {seg[i]} and {seg[j]}')
                links.append(tuple(sorted((at[seg[i]], at[seg[j]]))))
            if data_idx[0] > 0:
                moves.setdefault(at[seg[data_idx[0]]], []).append(seg[0])
            if data_idx[-1] < len(seg) - 1:
                moves.setdefault(at[seg[data_idx[-1]]], []).append(seg[-1])
        declared = {q: b for q, a, b in L['moves']}
        for q, dsts in moves.items():
            if len(dsts) > 1 or declared.get(q) != dsts[0]:
                raise ValueError(f'{lay.name}: layer {t} qubit {q} relocation {dsts} does not match {declared.get(q)}')
        for q in declared:
            if q not in moves:
                raise ValueError(f'{lay.name}: layer {t} declared move of {q} has no ancilla run')
        for q, a, b in L['moves']:
            if pos[q] != a:
                raise ValueError(f'{lay.name}: layer {t} qubit {q} is at {pos[q]}, not {a}')
            pos[q] = b
        history.append(links)
    return history


def convert(lay):
    history = check_layout(lay)
    cells = {}
    for q, (cell, init, born) in lay.qubits.items():
        if born == 1:
            cells[cell] = {'rc': list(cell), 'role': 'data', 'init': init, 'label': q}
    pos = {}
    steps = []

    def cell_of(q):
        return list(pos[q])

    for t, L in enumerate(lay.layers, start=1):
        prep, births = [], []
        for q, (cell, init, born) in sorted(lay.qubits.items()):
            if born == t:
                pos[q] = cell
                if t > 1:
                    prep.append([cell[0], cell[1], init])
                    births.append([q, cell[0], cell[1]])
        prep += [[c[0], c[1], '+'] for c in sorted(L['ancillas'])]
        if prep:
            steps.append({'op': 'prepare', 'cells': prep})
        if births:
            steps.append({'op': 'relabel', 'moves': births})
        if L['pre']:
            steps.append({'op': 'local', 'gates': [cell_of(q) + [g] for q, g in L['pre']]})
        steps.append({'op': 'cz', 'axis': L['axis']})
        dsts = {b for _, _, b in L['moves']}
        measured = sorted(set(c for c in L['ancillas'] if c not in dsts) | {a for _, a, _ in L['moves']})
        if measured:
            steps.append({'op': 'measure_x', 'cells': [list(c) for c in measured]})
            steps.append({'op': 'prepare', 'cells': [[c[0], c[1], '0'] for c in measured]})
        fix = []
        for q, a, b in L['moves']:
            pos[q] = b
            if (abs(a[0] - b[0]) + abs(a[1] - b[1])) % 2:
                fix.append((q, 'H'))
        if L['moves']:
            steps.append({'op': 'relabel', 'moves': [[q, b[0], b[1]] for q, _, b in sorted(L['moves'])]})
        gates = [cell_of(q) + [g] for q, g in fix + L['post']]
        if gates:
            steps.append({'op': 'local', 'gates': gates})
    if lay.final:
        steps.append({'op': 'local', 'gates': [cell_of(q) + [g] for q, g in lay.final]})
    out = {'name': lay.name, 'grid': [lay.rows, lay.cols],
           'cells': sorted(cells.values(), key=lambda c: c['rc']), 'steps': steps}
    if lay.target:
        out['target'] = {'circuit': lay.target[0], 'inputs': lay.target[1]}
    if lay.regions:
        out['regions'] = lay.regions
    return out, history


# ---------------------------------------------------------------------------------------------
# Named layouts

def e1_lattice():
    lay = Layout('E1_lattice', 3, 3)
    lay.qubit(0, (1, 1), 'p')
    for q, c in zip(range(1, 5), [(0, 1), (1, 2), (2, 1), (1, 0)]):
        lay.qubit(q, c, '+')
    lay.layer('V')
    lay.layer('H')
    lay.target = ('e1_star', 'p++++')
    return lay


def e2_lattice():
    qubits = list(range(5))
    s = Synth(5, 5, 'VH', qubits, {q: 1 for q in qubits}, kmax=3, fixed={0: (2, 2)})
    s.choose_cycle(qubits, 1, 2)
    sol = s.solve()
    if sol is None:
        raise RuntimeError('E2_lattice: no layout')
    lay = layout_from_solution('E2_lattice', 5, 5, sol, {q: 'p' for q in qubits}, {q: 1 for q in qubits})
    cyc = sol['cycles'][0]
    lay = lay.relabeled({q: i for i, q in enumerate(cyc)})
    lay.target = ('pentagon', 'ppppp')
    return lay


def ghz6_lattice():
    qubits = list(range(6))
    s = Synth(5, 5, 'VHV', qubits, {q: 1 for q in qubits}, kmax=3, fixed={5: (2, 2)})
    for k in range(5):
        s.require(k, 5, 1, 3)
    sol = s.solve()
    if sol is None:
        raise RuntimeError('GHZ6_lattice: no layout')
    lay = layout_from_solution('GHZ6_lattice', 5, 5, sol, {**{q: 'p' for q in range(5)}, 5: '+'},
                               {q: 1 for q in qubits})
    lay.target = ('ghz6', 'ppppp+')
    return lay


def lp_full(name='LP_full', col0=0, mirror=False, offset=0):
    """Encoder by tree fan-out from the input, pentagon, then the GHZ link to qubit 5."""
    width = 5

    def at(r, c):
        return (r, col0 + (width - 1 - c if mirror else c))

    A, B, C, D, E, Q = (offset + k for k in range(6))
    lay = Layout(name, 5, col0 + width)
    lay.qubit(B, at(1, 4), 'p', 1)
    lay.qubit(A, at(0, 4), '+', 1)
    lay.qubit(C, at(4, 4), '+', 1)
    lay.qubit(E, at(1, 1), '+', 2)
    lay.qubit(D, at(4, 1), '+', 2)
    lay.qubit(Q, at(1, 1), '+', 5)
    lay.layer('V', [at(2, 4), at(3, 4)], pre=[(B, 'Z'), (B, 'H')], post=[(A, 'H'), (C, 'H')])
    lay.layer('H', [at(1, 3), at(1, 2), at(4, 3), at(4, 2)],
              post=[(E, 'H'), (D, 'H')] + [(q, 'H') for q in (A, B, C, D, E)])
    lay.layer('V', [at(0, 1), at(2, 1), at(3, 1), at(2, 4), at(3, 4)], moves=[(E, at(1, 1), at(0, 1))])
    lay.layer('H', [at(0, 2), at(0, 3), at(4, 2), at(4, 3), at(1, 3), at(1, 2), at(1, 1), at(1, 0)],
              moves=[(B, at(1, 4), at(1, 0))])
    lay.layer('V', [at(2, 1), at(3, 1)])
    lay.layer('H', [at(1, 2), at(1, 3), at(1, 4)], moves=[(Q, at(1, 1), at(1, 4))])
    lay.layer('V', [at(2, 4), at(3, 4)])
    lay.target = ('logical_physical', 'p00000')
    return lay


def tree_locals(root, children, grandchildren):
    """Local gates of the E1 tree fan-out: before layer a, after layer a, after layer b."""
    five = [root] + children + grandchildren
    return ([(root, 'Z'), (root, 'H')], [(q, 'H') for q in children],
            [(q, 'H') for q in grandchildren] + [(q, 'H') for q in five])


def hop_layout(name, axes, sequential):
    """A decodes while B encodes: GHZ link to q5, pentagon and star on A, tree and pentagon on B."""
    n = len(axes)
    T = 3
    b0 = 8 if sequential else 4
    qubits = list(range(10))
    born = {q: 1 for q in range(6)}
    born.update({6: b0, 7: b0, 8: b0 + 1, 9: b0 + 1})
    s = Synth(9, 9, axes, qubits, born, kmax=4, fixed={5: (4, 4)})
    for k in range(5):
        s.require(k, 5, 1, T)
    s.require(0, 1, 1, T)
    s.require(0, 4, 1, T)
    last_a = 7
    for k in range(1, 5):
        s.require(0, k, T + 1, last_a)
    for a, b in ((1, 2), (2, 3), (3, 4)):
        s.require(a, b, 1, last_a)
    s.require(5, 6, b0, b0)
    s.require(5, 7, b0, b0)
    s.require(5, 8, b0 + 1, b0 + 1)
    s.require(7, 9, b0 + 1, b0 + 1)
    s.choose_cycle([5, 6, 7, 8, 9], b0 + 2, b0 + 3)
    extra = None
    if not sequential:
        regions = {**{q: 'A' for q in range(5)}, **{q: 'B' for q in range(5, 10)}}
        extra = lambda s: s.separate(regions, b0, n)
    sol = s.solve(extra)
    if sol is None:
        raise RuntimeError(f'{name}: no layout')
    inits = {**{q: 'p' for q in range(5)}, 5: '+', 6: '+', 7: '+', 8: '+', 9: '+'}
    lay = layout_from_solution(name, 9, 9, sol, inits, born)
    before, after_a, after_b = tree_locals(5, [6, 7], [8, 9])
    lay.layers[T - 1]['post'].append((0, 'H'))
    lay.layers[b0 - 1]['pre'] += before
    lay.layers[b0 - 1]['post'] += after_a
    lay.layers[b0]['post'] += after_b
    lay.final = [(q, 'H') for q in range(1, 5)] + [(0, 'H'), (0, 'Z')]
    cyc = sol['cycles'][0]
    lay = lay.relabeled({q: 5 + i for i, q in enumerate(cyc)})
    lay.target = ('hop', 'ppppp00000')
    lay.regions = {'A': list(range(5)), 'B': list(range(5, 10))}
    return lay


def horseshoe_lattice():
    """Two mirrored logical-physical layouts (A and D), a link between their physical qubits,
    then B and C encoded from those qubits."""
    gap = 2
    left = lp_full('horseshoe_lattice', 0, False, 0)
    right = lp_full('horseshoe_lattice', 5 + gap, True, 15)
    # Register D: labels 15..19, its physical qubit becomes 10.
    right = right.relabeled({20: 10})
    rows, cols = 9, 5 + gap + 5
    shift = 2
    lay = Layout('horseshoe_lattice', rows, cols)

    def mv(c):
        return (c[0] + shift, c[1])

    for part in (left, right):
        for q, (cell, init, born) in part.qubits.items():
            lay.qubit(q, mv(cell), init, born)
    for L1, L2 in zip(left.layers, right.layers):
        assert L1['axis'] == L2['axis']
        lay.layer(L1['axis'], [mv(c) for c in L1['ancillas'] + L2['ancillas']],
                  [(q, mv(a), mv(b)) for q, a, b in L1['moves'] + L2['moves']],
                  L1['pre'] + L2['pre'], L1['post'] + L2['post'])
    lay = encode_registers(lay, [(5, [6, 7, 8, 9], 5), (10, [11, 12, 13, 14], 10)], link=(5, 10),
                           axes_options=('HVHVH', 'HHVHV', 'HVHHV', 'HHVVH'))
    lay.target = ('horseshoe', 'p' + '0' * 14 + 'p' + '0' * 4)
    return lay


def encode_registers(lay, registers, link=None, axes_options=('HVHV',), lead=0):
    """Appends layers that encode fresh registers by tree fan-out from existing physical qubits.

    registers: (root, [child1, child2, grandchild1, grandchild2], first target label).  Every
    other qubit stays where it is.  With `link`, the two roots are first joined by a CZ.  `lead`
    extra leading layers let the roots relocate first.
    """
    t0 = len(lay.layers)
    pos = {q: cell for q, (cell, init, born) in lay.qubits.items()}
    for L in lay.layers:
        for q, a, b in L['moves']:
            pos[q] = b
    k = (1 if link else 0) + lead
    roots = [r for r, _, _ in registers]
    fresh = {}
    for _, (c1, c2, g1, g2), _ in registers:
        fresh.update({c1: k + 1, c2: k + 1, g1: k + 2, g2: k + 2})
    qubits = sorted(pos) + sorted(fresh)
    born = {q: 1 for q in pos}
    born.update(fresh)
    pinned = {q: c for q, c in pos.items() if q not in roots}
    sol = None
    for axes in axes_options:
        s = Synth(lay.rows, lay.cols, axes, qubits, born, kmax=4, fixed={r: pos[r] for r in roots}, pinned=pinned)
        if link:
            s.require(link[0], link[1], 1, 1)
        for r, (c1, c2, g1, g2), _ in registers:
            s.require(r, c1, k + 1, k + 1)
            s.require(r, c2, k + 1, k + 1)
            s.require(r, g1, k + 2, k + 2)
            s.require(c2, g2, k + 2, k + 2)
            s.choose_cycle([r, c1, c2, g1, g2], k + 3, k + 4)
        sol = s.solve()
        if sol is not None:
            break
    if sol is None:
        raise RuntimeError(f'{lay.name}: no encoding layout')
    for q, b in fresh.items():
        lay.qubit(q, sol['pos'][(q, b)], '+', t0 + b)
    for L in sol['layers']:
        lay.layer(L['axis'], L['ancillas'], L['moves'])
    for r, (c1, c2, g1, g2), _ in registers:
        before, after_a, after_b = tree_locals(r, [c1, c2], [g1, g2])
        lay.layers[t0 + k]['pre'] += before
        lay.layers[t0 + k]['post'] += after_a
        lay.layers[t0 + k + 1]['post'] += after_b
    mapping = {}
    for cyc, (_, _, base) in zip(sol['cycles'], registers):
        mapping.update({q: base + i for i, q in enumerate(cyc)})
    return lay.relabeled(mapping)


def lcs2_lattice():
    """Logical-physical layout followed by the encoding of register B from qubit 5."""
    lp = lp_full('LCS2_lattice')
    lay = Layout('LCS2_lattice', 9, 9)
    shift = (2, 2)
    for q, (cell, init, born) in lp.qubits.items():
        lay.qubit(q, (cell[0] + shift[0], cell[1] + shift[1]), init, born)

    def mv(c):
        return (c[0] + shift[0], c[1] + shift[1])

    for L in lp.layers:
        lay.layer(L['axis'], [mv(c) for c in L['ancillas']], [(q, mv(a), mv(b)) for q, a, b in L['moves']],
                  L['pre'], L['post'])
    lay = encode_registers(lay, [(5, [6, 7, 8, 9], 5)], axes_options=('HHVHV', 'VHVHV', 'HVHVH', 'VVHVH'), lead=1)
    lay.target = ('lcs2_sequential', 'p' + '0' * 9)
    return lay


LAYOUTS = {
    'E1_lattice': e1_lattice,
    'E2_lattice': e2_lattice,
    'GHZ6_lattice': ghz6_lattice,
    'LP_full': lp_full,
    'hop_simultaneous': lambda: hop_layout('hop_simultaneous', 'VHVVHVH', False),
    'hop_sequential': lambda: hop_layout('hop_sequential', 'VHVVHVHVHVH', True),
    'horseshoe_lattice': horseshoe_lattice,
    'LCS2_lattice': lcs2_lattice,
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument('--out', default=os.path.join(os.path.dirname(os.path.abspath(__file__)), '..', 'schedules'))
    ap.add_argument('--only', nargs='*', choices=sorted(LAYOUTS))
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)
    for name in args.only or LAYOUTS:
        lay = LAYOUTS[name]()
        sched, history = convert(lay)
        path = os.path.join(args.out, name + '.json')
        with open(path, 'w') as f:
            json.dump(sched, f, indent=1)
            f.write('\n')
        links = sum(len(h) for h in history)
        print(f'{name}: {len(lay.layers)} global CZ layers, {links} links -> {path}', file=sys.stderr)


if __name__ == '__main__':
    main()
