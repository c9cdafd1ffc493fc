//! Many-valued Kripke models, the evaluation function, satisfaction of
//! labelled formulas and sequents, and frame-class predicates.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::domain::{Connective, Label, Signature, TruthDomain};
use crate::error::{Error, Result};
use crate::formula::{Formula, LabelledFormula, Sequent};

/// A finite Kripke model `⟨W, R, I⟩` with worlds `0..count`.
///
/// Variables missing from the valuation take label 1 everywhere.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KripkeModel {
    succ: Vec<Vec<usize>>,
    valuation: BTreeMap<String, Vec<Label>>,
}

impl KripkeModel {
    /// `count` worlds, no edges, every variable at label 1.
    pub fn new(count: usize) -> Result<Self> {
        if count == 0 {
            return Err(Error::EmptyModel);
        }
        Ok(Self {
            succ: vec![Vec::new(); count],
            valuation: BTreeMap::new(),
        })
    }

    /// Builds a model from an adjacency list; successor lists are sorted and deduplicated.
    pub fn from_successors(mut succ: Vec<Vec<usize>>) -> Result<Self> {
        if succ.is_empty() {
            return Err(Error::EmptyModel);
        }
        let count = succ.len();
        for list in &mut succ {
            list.sort_unstable();
            list.dedup();
            if let Some(&v) = list.iter().find(|&&v| v >= count) {
                return Err(Error::UnknownWorld { world: v, count });
            }
        }
        Ok(Self {
            succ,
            valuation: BTreeMap::new(),
        })
    }

    pub fn world_count(&self) -> usize {
        self.succ.len()
    }

    pub fn worlds(&self) -> std::ops::Range<usize> {
        0..self.succ.len()
    }

    fn check_world(&self, u: usize) -> Result<()> {
        if u < self.succ.len() {
            Ok(())
        } else {
            Err(Error::UnknownWorld {
                world: u,
                count: self.succ.len(),
            })
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_world(u)?;
        self.check_world(v)?;
        if let Err(pos) = self.succ[u].binary_search(&v) {
            self.succ[u].insert(pos, v);
        }
        Ok(())
    }

    pub fn set_value(&mut self, u: usize, var: &str, label: Label) -> Result<()> {
        self.check_world(u)?;
        let count = self.succ.len();
        self.valuation
            .entry(var.to_string())
            .or_insert_with(|| vec![1; count])[u] = label;
        Ok(())
    }

    /// Replaces the whole valuation row of `var`.
    pub fn set_row(&mut self, var: &str, row: Vec<Label>) -> Result<()> {
        if row.len() != self.succ.len() {
            return Err(Error::UnknownWorld {
                world: row.len(),
                count: self.succ.len(),
            });
        }
        self.valuation.insert(var.to_string(), row);
        Ok(())
    }

    /// `S(u) = { v : u R v }`, sorted.
    pub fn successors(&self, u: usize) -> Result<&[usize]> {
        self.check_world(u)?;
        Ok(&self.succ[u])
    }

    pub(crate) fn succ(&self, u: usize) -> &[usize] {
        &self.succ[u]
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.succ
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.succ
            .get(u)
            .is_some_and(|s| s.binary_search(&v).is_ok())
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.iter().map(move |&v| (u, v)))
    }

    /// `I(u, p)`, defaulting to label 1 for variables without a row.
    pub fn value(&self, u: usize, var: &str) -> Label {
        self.valuation.get(var).map_or(1, |row| row[u])
    }

    pub fn row(&self, var: &str) -> Option<&[Label]> {
        self.valuation.get(var).map(Vec::as_slice)
    }

    pub fn valuation(&self) -> &BTreeMap<String, Vec<Label>> {
        &self.valuation
    }

    /// Checks every valuation label against `domain`.
    pub fn check(&self, domain: TruthDomain) -> Result<()> {
        for row in self.valuation.values() {
            for &k in row {
                domain.check(k as usize)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for KripkeModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parser::render_model(self))
    }
}

/// Classes of accessibility relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FrameClass {
    Any,
    Serial,
    Reflexive,
    Transitive,
    Symmetric,
    Euclidean,
    /// Reflexive and transitive.
    Preorder,
    /// Reflexive and Euclidean, i.e. an equivalence relation.
    Equivalence,
}

impl FrameClass {
    pub const ALL: [FrameClass; 8] = [
        FrameClass::Any,
        FrameClass::Serial,
        FrameClass::Reflexive,
        FrameClass::Transitive,
        FrameClass::Symmetric,
        FrameClass::Euclidean,
        FrameClass::Preorder,
        FrameClass::Equivalence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FrameClass::Any => "any",
            FrameClass::Serial => "serial",
            FrameClass::Reflexive => "reflexive",
            FrameClass::Transitive => "transitive",
            FrameClass::Symmetric => "symmetric",
            FrameClass::Euclidean => "euclidean",
            FrameClass::Preorder => "preorder",
            FrameClass::Equivalence => "equivalence",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(name))
    }

    /// Smallest superset of `succ` in this class. Used by the random
    /// generators; `Serial` gives each dead end a self loop.
    #[allow(clippy::needless_range_loop)]
    pub fn close(self, succ: &mut [Vec<usize>]) {
        let count = succ.len();
        let mut adj = vec![vec![false; count]; count];
        for (u, s) in succ.iter().enumerate() {
            for &v in s {
                adj[u][v] = true;
            }
        }
        let reflexive = |adj: &mut Vec<Vec<bool>>| (0..count).for_each(|u| adj[u][u] = true);
        let symmetric = |adj: &mut Vec<Vec<bool>>| {
            for u in 0..count {
                for v in 0..count {
                    if adj[u][v] {
                        adj[v][u] = true;
                    }
                }
            }
        };
        let transitive = |adj: &mut Vec<Vec<bool>>| {
            for k in 0..count {
                for u in 0..count {
                    if adj[u][k] {
                        for v in 0..count {
                            if adj[k][v] {
                                adj[u][v] = true;
                            }
                        }
                    }
                }
            }
        };
        match self {
            FrameClass::Any => {}
            FrameClass::Serial => {
                for u in 0..count {
                    if !adj[u].iter().any(|&b| b) {
                        adj[u][u] = true;
                    }
                }
            }
            FrameClass::Reflexive => reflexive(&mut adj),
            FrameClass::Transitive => transitive(&mut adj),
            FrameClass::Symmetric => symmetric(&mut adj),
            FrameClass::Euclidean => loop {
                let mut changed = false;
                for u in 0..count {
                    for v in 0..count {
                        for w in 0..count {
                            if adj[u][v] && adj[u][w] && !adj[v][w] {
                                adj[v][w] = true;
                                changed = true;
                            }
                        }
                    }
                }
                if !changed {
                    break;
                }
            },
            FrameClass::Preorder => {
                reflexive(&mut adj);
                transitive(&mut adj);
            }
            FrameClass::Equivalence => {
                reflexive(&mut adj);
                symmetric(&mut adj);
                transitive(&mut adj);
            }
        }
        for (u, s) in succ.iter_mut().enumerate() {
            *s = (0..count).filter(|&v| adj[u][v]).collect();
        }
    }
}

impl fmt::Display for FrameClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Worlds witnessing that a relation misses a frame property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameViolation {
    pub property: &'static str,
    pub worlds: Vec<usize>,
}

impl fmt::Display for FrameViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at", self.property)?;
        for w in &self.worlds {
            write!(f, " {w}")?;
        }
        Ok(())
    }
}

/// First violation of `class` in `m`, if any.
pub fn frame_violation(m: &KripkeModel, class: FrameClass) -> Option<FrameViolation> {
    let worlds = m.worlds();
    let fail = |property, worlds: Vec<usize>| Some(FrameViolation { property, worlds });
    match class {
        FrameClass::Any => None,
        FrameClass::Serial => worlds
            .into_iter()
            .find(|&u| m.succ(u).is_empty())
            .and_then(|u| fail("serial", vec![u])),
        FrameClass::Reflexive => worlds
            .into_iter()
            .find(|&u| !m.has_edge(u, u))
            .and_then(|u| fail("reflexive", vec![u])),
        FrameClass::Symmetric => m
            .edges()
            .find(|&(u, v)| !m.has_edge(v, u))
            .and_then(|(u, v)| fail("symmetric", vec![u, v])),
        FrameClass::Transitive => {
            for (u, v) in m.edges() {
                for &w in m.succ(v) {
                    if !m.has_edge(u, w) {
                        return fail("transitive", vec![u, v, w]);
                    }
                }
            }
            None
        }
        FrameClass::Euclidean => {
            for u in worlds {
                for &v in m.succ(u) {
                    for &w in m.succ(u) {
                        if !m.has_edge(v, w) {
                            return fail("euclidean", vec![u, v, w]);
                        }
                    }
                }
            }
            None
        }
        FrameClass::Preorder => frame_violation(m, FrameClass::Reflexive)
            .or_else(|| frame_violation(m, FrameClass::Transitive)),
        FrameClass::Equivalence => frame_violation(m, FrameClass::Reflexive)
            .or_else(|| frame_violation(m, FrameClass::Euclidean)),
    }
}

pub fn frame_check(m: &KripkeModel, class: FrameClass) -> bool {
    frame_violation(m, class).is_none()
}

/// Identifier of a formula interned in an [`Evaluator`].
pub type NodeId = usize;

#[derive(Debug, Clone)]
enum Node<'s> {
    Var(String),
    Apply(&'s Connective, Vec<NodeId>),
    Box(NodeId),
    Dia(NodeId),
}

/// A set of formulas compiled into a subformula DAG.
///
/// [`Evaluator::evaluate`] computes every node at every world bottom-up,
/// so each `(world, subformula)` pair is evaluated once per model.
#[derive(Debug, Clone)]
pub struct Evaluator<'s> {
    sig: &'s Signature,
    nodes: Vec<Node<'s>>,
    ids: HashMap<Formula, NodeId>,
}

impl<'s> Evaluator<'s> {
    pub fn new(sig: &'s Signature) -> Self {
        Self {
            sig,
            nodes: Vec::new(),
            ids: HashMap::new(),
        }
    }

    pub fn signature(&self) -> &'s Signature {
        self.sig
    }

    /// Interns `f` and its subformulas. Children always get smaller ids.
    pub fn insert(&mut self, f: &Formula) -> Result<NodeId> {
        if let Some(&id) = self.ids.get(f) {
            return Ok(id);
        }
        let node = match f {
            Formula::Var(v) => Node::Var(v.clone()),
            Formula::Apply(name, args) => {
                let conn = self.sig.connective(name)?;
                if conn.arity() != args.len() {
                    return Err(Error::ArityMismatch {
                        name: name.clone(),
                        expected: conn.arity(),
                        got: args.len(),
                    });
                }
                let ids = args
                    .iter()
                    .map(|a| self.insert(a))
                    .collect::<Result<Vec<_>>>()?;
                Node::Apply(conn, ids)
            }
            Formula::Box(inner) => Node::Box(self.insert(inner)?),
            Formula::Dia(inner) => Node::Dia(self.insert(inner)?),
        };
        self.nodes.push(node);
        let id = self.nodes.len() - 1;
        self.ids.insert(f.clone(), id);
        Ok(id)
    }

    pub fn id(&self, f: &Formula) -> Option<NodeId> {
        self.ids.get(f).copied()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn compile_sequent(&mut self, s: &Sequent) -> Result<CompiledSequent> {
        let mut side = |set: &std::collections::BTreeSet<LabelledFormula>| {
            set.iter()
                .map(|lf| {
                    self.sig.domain().check(lf.label as usize)?;
                    Ok((self.insert(&lf.formula)?, lf.label))
                })
                .collect::<Result<Vec<_>>>()
        };
        let antecedent = side(&s.antecedent)?;
        let succedent = side(&s.succedent)?;
        Ok(CompiledSequent {
            antecedent,
            succedent,
        })
    }

    /// Values of every interned formula at every world of `m`.
    pub fn evaluate(&self, m: &KripkeModel) -> ValueTable {
        let worlds = m.world_count();
        let n = self.sig.n();
        let mut data = vec![0 as Label; self.nodes.len() * worlds];
        let mut args = Vec::new();
        for (id, node) in self.nodes.iter().enumerate() {
            let base = id * worlds;
            match node {
                Node::Var(v) => match m.row(v) {
                    Some(row) => data[base..base + worlds].copy_from_slice(row),
                    None => data[base..base + worlds].fill(1),
                },
                Node::Apply(conn, children) => {
                    for u in 0..worlds {
                        args.clear();
                        args.extend(children.iter().map(|&c| data[c * worlds + u]));
                        data[base + u] = conn.apply(&args);
                    }
                }
                Node::Box(c) => {
                    for u in 0..worlds {
                        // inf(∅) = v_n
                        data[base + u] = m
                            .succ(u)
                            .iter()
                            .map(|&v| data[c * worlds + v])
                            .min()
                            .unwrap_or(n);
                    }
                }
                Node::Dia(c) => {
                    for u in 0..worlds {
                        // sup(∅) = v_1
                        data[base + u] = m
                            .succ(u)
                            .iter()
                            .map(|&v| data[c * worlds + v])
                            .max()
                            .unwrap_or(1);
                    }
                }
            }
        }
        ValueTable { worlds, data }
    }
}

/// Output of [`Evaluator::evaluate`]: `I(u, φ)` for interned `φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueTable {
    worlds: usize,
    data: Vec<Label>,
}

impl ValueTable {
    pub fn get(&self, node: NodeId, u: usize) -> Label {
        self.data[node * self.worlds + u]
    }

    pub fn row(&self, node: NodeId) -> &[Label] {
        &self.data[node * self.worlds..(node + 1) * self.worlds]
    }
}

/// A sequent whose formulas are interned in an [`Evaluator`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompiledSequent {
    antecedent: Vec<(NodeId, Label)>,
    succedent: Vec<(NodeId, Label)>,
}

impl CompiledSequent {
    pub fn holds_at(&self, values: &ValueTable, u: usize) -> bool {
        !self.antecedent.iter().all(|&(id, k)| values.get(id, u) == k)
            || self.succedent.iter().any(|&(id, k)| values.get(id, u) == k)
    }

    /// First world at which the sequent fails.
    pub fn refuting_world(&self, values: &ValueTable) -> Option<usize> {
        (0..values.worlds).find(|&u| !self.holds_at(values, u))
    }
}

/// `I(u, φ)`.
pub fn eval(sig: &Signature, m: &KripkeModel, u: usize, f: &Formula) -> Result<Label> {
    m.check_world(u)?;
    let mut ev = Evaluator::new(sig);
    let id = ev.insert(f)?;
    Ok(ev.evaluate(m).get(id, u))
}

/// `M, u ⊨ (φ, k)`.
pub fn satisfies_labelled(
    sig: &Signature,
    m: &KripkeModel,
    u: usize,
    lf: &LabelledFormula,
) -> Result<bool> {
    Ok(eval(sig, m, u, &lf.formula)? == lf.label)
}

/// `M, u ⊨ Γ → Δ`.
pub fn satisfies_sequent(sig: &Signature, m: &KripkeModel, u: usize, s: &Sequent) -> Result<bool> {
    m.check_world(u)?;
    let mut ev = Evaluator::new(sig);
    let cs = ev.compile_sequent(s)?;
    Ok(cs.holds_at(&ev.evaluate(m), u))
}

/// First world of `m` not satisfying `s`.
pub fn refuting_world(sig: &Signature, m: &KripkeModel, s: &Sequent) -> Result<Option<usize>> {
    let mut ev = Evaluator::new(sig);
    let cs = ev.compile_sequent(s)?;
    Ok(cs.refuting_world(&ev.evaluate(m)))
}

/// `M ⊨ Σ`: every world satisfies every sequent.
pub fn model_satisfies<'a, I>(sig: &Signature, m: &KripkeModel, sequents: I) -> Result<bool>
where
    I: IntoIterator<Item = &'a Sequent>,
{
    let mut ev = Evaluator::new(sig);
    let compiled = sequents
        .into_iter()
        .map(|s| ev.compile_sequent(s))
        .collect::<Result<Vec<_>>>()?;
    let values = ev.evaluate(m);
    Ok(compiled.iter().all(|cs| cs.refuting_world(&values).is_none()))
}
