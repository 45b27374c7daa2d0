use alloc::vec;
use alloc::vec::Vec;

use super::ActDefinitions;
use crate::error::Error;

/// Reference graph as adjacency lists over definition positions.
fn graph(defs: &ActDefinitions) -> Result<Vec<Vec<usize>>, Error> {
    defs.iter()
        .map(|(_, body)| {
            body.act_refs().into_iter().map(|r| defs.position(&r).ok_or(Error::UnknownActRef(r))).collect()
        })
        .collect()
}

struct Tarjan<'g> {
    adj: &'g [Vec<usize>],
    index: Vec<Option<usize>>,
    low: Vec<usize>,
    on_stack: Vec<bool>,
    stack: Vec<usize>,
    next: usize,
    sccs: Vec<Vec<usize>>,
}

impl Tarjan<'_> {
    fn visit(&mut self, v: usize) {
        self.index[v] = Some(self.next);
        self.low[v] = self.next;
        self.next += 1;
        self.stack.push(v);
        self.on_stack[v] = true;
        for &w in &self.adj[v] {
            match self.index[w] {
                None => {
                    self.visit(w);
                    self.low[v] = self.low[v].min(self.low[w]);
                }
                Some(iw) if self.on_stack[w] => self.low[v] = self.low[v].min(iw),
                Some(_) => {}
            }
        }
        if Some(self.low[v]) == self.index[v] {
            let mut scc = Vec::new();
            loop {
                let w = self.stack.pop().expect("tarjan stack");
                self.on_stack[w] = false;
                scc.push(w);
                if w == v {
                    break;
                }
            }
            self.sccs.push(scc);
        }
    }
}

fn cyclic_components(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut t = Tarjan {
        adj,
        index: vec![None; n],
        low: vec![0; n],
        on_stack: vec![false; n],
        stack: Vec::new(),
        next: 0,
        sccs: Vec::new(),
    };
    for v in 0..n {
        if t.index[v].is_none() {
            t.visit(v);
        }
    }
    let mut cycles: Vec<Vec<usize>> = t
        .sccs
        .into_iter()
        .filter(|scc| scc.len() > 1 || adj[scc[0]].contains(&scc[0]))
        .map(|mut scc| {
            scc.sort_unstable();
            scc
        })
        .collect();
    cycles.sort();
    cycles
}

/// Strongly connected groups of mutually recursive acts, each listed in
/// definition order. Acts outside every group unfold finitely unless they
/// reach one (see [`reaches_cycle`]).
pub fn detect_cycles(defs: &ActDefinitions) -> Result<Vec<Vec<&str>>, Error> {
    let adj = graph(defs)?;
    let names: Vec<&str> = defs.names().collect();
    Ok(cyclic_components(&adj).into_iter().map(|scc| scc.into_iter().map(|i| names[i]).collect()).collect())
}

/// True when the unfolding of `name` is infinite, i.e. it reaches a cycle.
pub fn reaches_cycle(defs: &ActDefinitions, name: &str) -> Result<bool, Error> {
    let adj = graph(defs)?;
    let start = defs.position(name).ok_or_else(|| Error::UnknownActRef(name.into()))?;
    let on_cycle: Vec<usize> = cyclic_components(&adj).into_iter().flatten().collect();
    let mut seen = vec![false; adj.len()];
    let mut todo = vec![start];
    while let Some(v) = todo.pop() {
        if on_cycle.contains(&v) {
            return Ok(true);
        }
        if !core::mem::replace(&mut seen[v], true) {
            todo.extend(&adj[v]);
        }
    }
    Ok(false)
}
