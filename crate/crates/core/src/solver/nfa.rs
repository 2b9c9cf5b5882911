//! Thompson construction followed by epsilon elimination.

use super::regex::{self, RegexNode};

pub type StateId = usize;

/// An epsilon-free nondeterministic automaton over `{0, 1}`.
///
/// The start state has no incoming transitions, which the segmentation
/// graph relies on.
#[derive(Clone, Debug)]
pub struct Automaton {
    start: StateId,
    accepting: Vec<bool>,
    // next[state][symbol]
    next: Vec<[Vec<StateId>; 2]>,
}

impl Automaton {
    pub fn from_regex(node: &RegexNode) -> Automaton {
        let mut thompson = Thompson::default();
        let (start, accept) = thompson.build(node);
        thompson.eliminate_epsilons(start, accept)
    }

    pub fn state_count(&self) -> usize {
        self.next.len()
    }

    pub fn start(&self) -> StateId {
        self.start
    }

    pub fn is_accepting(&self, s: StateId) -> bool {
        self.accepting[s]
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = StateId> + '_ {
        (0..self.state_count()).filter(|&s| self.accepting[s])
    }

    pub fn successors(&self, s: StateId, symbol: bool) -> &[StateId] {
        &self.next[s][symbol as usize]
    }

    /// All `(from, symbol, to)` triples.
    pub fn transitions(&self) -> impl Iterator<Item = (StateId, bool, StateId)> + '_ {
        self.next.iter().enumerate().flat_map(|(a, by_symbol)| {
            by_symbol
                .iter()
                .enumerate()
                .flat_map(move |(sym, targets)| targets.iter().map(move |&b| (a, sym == 1, b)))
        })
    }

    pub fn accepts(&self, word: &[bool]) -> bool {
        let n = self.state_count();
        let mut current = vec![false; n];
        current[self.start] = true;
        let mut next = vec![false; n];
        for &symbol in word {
            next.iter_mut().for_each(|x| *x = false);
            let mut any = false;
            for s in (0..n).filter(|&s| current[s]) {
                for &t in self.successors(s, symbol) {
                    next[t] = true;
                    any = true;
                }
            }
            if !any {
                return false;
            }
            std::mem::swap(&mut current, &mut next);
        }
        (0..n).any(|s| current[s] && self.accepting[s])
    }
}

/// The automaton for boards reducible to one peg.
pub fn build_solvable_nfa() -> Automaton {
    Automaton::from_regex(&regex::solvable_language())
}

#[derive(Default)]
struct Thompson {
    epsilon: Vec<Vec<StateId>>,
    symbol: Vec<Vec<(bool, StateId)>>,
}

impl Thompson {
    fn state(&mut self) -> StateId {
        self.epsilon.push(Vec::new());
        self.symbol.push(Vec::new());
        self.epsilon.len() - 1
    }

    fn build(&mut self, node: &RegexNode) -> (StateId, StateId) {
        match node {
            RegexNode::Literal(b) => {
                let (s, t) = (self.state(), self.state());
                self.symbol[s].push((*b, t));
                (s, t)
            }
            RegexNode::Concat(parts) => {
                let (s, t) = (self.state(), self.state());
                let mut tail = s;
                for part in parts {
                    let (ps, pt) = self.build(part);
                    self.epsilon[tail].push(ps);
                    tail = pt;
                }
                self.epsilon[tail].push(t);
                (s, t)
            }
            RegexNode::Union(branches) => {
                let (s, t) = (self.state(), self.state());
                for branch in branches {
                    let (bs, bt) = self.build(branch);
                    self.epsilon[s].push(bs);
                    self.epsilon[bt].push(t);
                }
                (s, t)
            }
            RegexNode::Star(inner) => {
                let (s, t) = (self.state(), self.state());
                let (is, it) = self.build(inner);
                self.epsilon[s].extend([is, t]);
                self.epsilon[it].extend([is, t]);
                (s, t)
            }
            RegexNode::Plus(inner) => {
                let star = RegexNode::Star(inner.clone());
                self.build(&RegexNode::Concat(vec![(**inner).clone(), star]))
            }
        }
    }

    fn closure(&self, s: StateId) -> Vec<bool> {
        let mut seen = vec![false; self.epsilon.len()];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(q) = stack.pop() {
            for &r in &self.epsilon[q] {
                if !seen[r] {
                    seen[r] = true;
                    stack.push(r);
                }
            }
        }
        seen
    }

    /// Keeps the start state and every target of a symbol edge; a state
    /// inherits the symbol edges and acceptance of its epsilon closure.
    fn eliminate_epsilons(&self, start: StateId, accept: StateId) -> Automaton {
        let n = self.epsilon.len();
        let mut keep = vec![false; n];
        keep[start] = true;
        for edges in &self.symbol {
            for &(_, t) in edges {
                keep[t] = true;
            }
        }
        let mut renumber = vec![usize::MAX; n];
        let mut kept = Vec::new();
        // start first so it becomes state 0
        for s in std::iter::once(start).chain((0..n).filter(|&s| s != start && keep[s])) {
            renumber[s] = kept.len();
            kept.push(s);
        }
        let mut next = vec![[Vec::new(), Vec::new()]; kept.len()];
        let mut accepting = vec![false; kept.len()];
        for (new_id, &old) in kept.iter().enumerate() {
            let closure = self.closure(old);
            accepting[new_id] = closure[accept];
            for q in (0..n).filter(|&q| closure[q]) {
                for &(sym, t) in &self.symbol[q] {
                    next[new_id][sym as usize].push(renumber[t]);
                }
            }
            for targets in next[new_id].iter_mut() {
                targets.sort_unstable();
                targets.dedup();
            }
        }
        prune_unreachable(Automaton { start: 0, accepting, next })
    }
}

fn prune_unreachable(a: Automaton) -> Automaton {
    let n = a.state_count();
    let mut reach = vec![false; n];
    let mut stack = vec![a.start];
    reach[a.start] = true;
    while let Some(s) = stack.pop() {
        for sym in [false, true] {
            for &t in a.successors(s, sym) {
                if !reach[t] {
                    reach[t] = true;
                    stack.push(t);
                }
            }
        }
    }
    let mut renumber = vec![usize::MAX; n];
    let mut count = 0;
    for s in 0..n {
        if reach[s] {
            renumber[s] = count;
            count += 1;
        }
    }
    let mut next = vec![[Vec::new(), Vec::new()]; count];
    let mut accepting = vec![false; count];
    for s in (0..n).filter(|&s| reach[s]) {
        accepting[renumber[s]] = a.accepting[s];
        for sym in 0..2 {
            next[renumber[s]][sym] = a.next[s][sym].iter().map(|&t| renumber[t]).collect();
        }
    }
    Automaton { start: renumber[a.start], accepting, next }
}
