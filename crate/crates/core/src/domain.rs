//! Truth values, truth-table connectives and signatures.
//!
//! Truth values `v_1 < … < v_n` are identified with their labels `1..=n`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// A truth-value label `k`, standing for `v_k`.
pub type Label = u8;

/// A set of labels, kept sorted.
pub type LabelSet = BTreeSet<Label>;

/// Largest supported number of truth values.
pub const MAX_DOMAIN: usize = 255;

/// Names that can never be used for a propositional connective.
pub const RESERVED: [&str; 2] = ["Box", "Dia"];

/// The finite, linearly ordered set of truth values `v_1 < … < v_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TruthDomain {
    n: Label,
}

impl TruthDomain {
    pub fn new(n: usize) -> Result<Self> {
        if !(2..=MAX_DOMAIN).contains(&n) {
            return Err(Error::InvalidDomain {
                got: n,
                max: MAX_DOMAIN,
            });
        }
        Ok(Self { n: n as Label })
    }

    /// Number of truth values.
    pub fn size(self) -> Label {
        self.n
    }

    pub fn top(self) -> Label {
        self.n
    }

    pub fn labels(self) -> impl DoubleEndedIterator<Item = Label> + Clone {
        1..=self.n
    }

    pub fn contains(self, label: usize) -> bool {
        (1..=self.n as usize).contains(&label)
    }

    pub fn check(self, label: usize) -> Result<Label> {
        if self.contains(label) {
            Ok(label as Label)
        } else {
            Err(Error::LabelOutOfRange { label, n: self.n })
        }
    }
}

/// `[i, j] = { k : i ≤ k ≤ j }` restricted to `1..=n`; empty when `i > j`.
///
/// Bounds `0` and `n + 1` are accepted as formal endpoints.
pub fn interval(i: usize, j: usize, n: Label) -> LabelSet {
    let lo = i.max(1);
    let hi = j.min(n as usize);
    (lo..=hi).map(|k| k as Label).collect()
}

/// `{1..n} \ [i, j]`, i.e. `[1, i-1] ∪ [j+1, n]`.
pub fn complement_interval(i: usize, j: usize, n: Label) -> LabelSet {
    let inside = interval(i, j, n);
    (1..=n).filter(|k| !inside.contains(k)).collect()
}

/// `{1..n} \ set`.
pub fn complement(set: &LabelSet, n: Label) -> LabelSet {
    (1..=n).filter(|k| !set.contains(k)).collect()
}

/// An `ℓ`-ary propositional connective given by its truth table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Connective {
    name: String,
    arity: usize,
    n: Label,
    // Row-major over argument tuples, first argument most significant.
    table: Vec<Label>,
}

impl Connective {
    /// Builds a connective from a full table listed in tuple order
    /// `(1,…,1), (1,…,2), …, (n,…,n)`.
    pub fn from_table(
        name: impl Into<String>,
        arity: usize,
        domain: TruthDomain,
        table: Vec<Label>,
    ) -> Result<Self> {
        let name = name.into();
        let n = domain.size();
        let expected = table_len(n, arity);
        if table.len() != expected {
            return Err(Error::IncompleteTable {
                name,
                expected,
                got: table.len(),
            });
        }
        for &v in &table {
            domain.check(v as usize)?;
        }
        Ok(Self {
            name,
            arity,
            n,
            table,
        })
    }

    pub fn from_fn(
        name: impl Into<String>,
        arity: usize,
        domain: TruthDomain,
        f: impl Fn(&[Label]) -> Label,
    ) -> Result<Self> {
        let n = domain.size();
        let table = tuples(n, arity).map(|args| f(&args)).collect();
        Self::from_table(name, arity, domain, table)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn domain_size(&self) -> Label {
        self.n
    }

    /// Table lookup. `args` must have length `arity` and hold valid labels.
    pub fn apply(&self, args: &[Label]) -> Label {
        debug_assert_eq!(args.len(), self.arity);
        let idx = args
            .iter()
            .fold(0usize, |acc, &k| acc * self.n as usize + (k as usize - 1));
        self.table[idx]
    }

    /// Every `(argument tuple, value)` row of the table in tuple order.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<Label>, Label)> + '_ {
        tuples(self.n, self.arity).zip(self.table.iter().copied())
    }
}

fn table_len(n: Label, arity: usize) -> usize {
    (n as usize).pow(arity as u32)
}

/// All label tuples of the given length in lexicographic order.
pub fn tuples(n: Label, len: usize) -> impl Iterator<Item = Vec<Label>> {
    let total = table_len(n, len);
    (0..total).map(move |mut idx| {
        let mut out = vec![1; len];
        for slot in out.iter_mut().rev() {
            *slot = (idx % n as usize) as Label + 1;
            idx /= n as usize;
        }
        out
    })
}

/// A truth domain together with its propositional connectives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    domain: TruthDomain,
    connectives: BTreeMap<String, Connective>,
}

impl Signature {
    pub fn new(domain: TruthDomain) -> Self {
        Self {
            domain,
            connectives: BTreeMap::new(),
        }
    }

    pub fn domain(&self) -> TruthDomain {
        self.domain
    }

    pub fn n(&self) -> Label {
        self.domain.size()
    }

    pub fn add(&mut self, conn: Connective) -> Result<()> {
        if RESERVED.contains(&conn.name()) {
            return Err(Error::ReservedName(conn.name));
        }
        if conn.n != self.domain.size() {
            return Err(Error::DomainMismatch {
                name: conn.name,
                expected: self.domain.size(),
                got: conn.n,
            });
        }
        if self.connectives.contains_key(conn.name()) {
            return Err(Error::DuplicateConnective(conn.name));
        }
        self.connectives.insert(conn.name.clone(), conn);
        Ok(())
    }

    pub fn with(mut self, conn: Connective) -> Result<Self> {
        self.add(conn)?;
        Ok(self)
    }

    pub fn get(&self, name: &str) -> Option<&Connective> {
        self.connectives.get(name)
    }

    pub fn connective(&self, name: &str) -> Result<&Connective> {
        self.get(name)
            .ok_or_else(|| Error::UnknownConnective(name.to_string()))
    }

    /// Connectives in name order.
    pub fn connectives(&self) -> impl Iterator<Item = &Connective> {
        self.connectives.values()
    }

    pub fn apply_connective(&self, name: &str, args: &[Label]) -> Result<Label> {
        let conn = self.connective(name)?;
        if conn.arity() != args.len() {
            return Err(Error::ArityMismatch {
                name: name.to_string(),
                expected: conn.arity(),
                got: args.len(),
            });
        }
        for &k in args {
            self.domain.check(k as usize)?;
        }
        Ok(conn.apply(args))
    }

    /// The `n`-valued Łukasiewicz signature: `imp`, `neg`, `and` (min), `or` (max).
    ///
    /// `imp(a, b) = min(n, n - a + b)` and `neg(k) = n - k + 1`.
    pub fn lukasiewicz(n: usize) -> Result<Self> {
        let domain = TruthDomain::new(n)?;
        let top = domain.size();
        Signature::new(domain)
            .with(Connective::from_fn("imp", 2, domain, |a| {
                (top as i32 - a[0] as i32 + a[1] as i32).min(top as i32) as Label
            })?)?
            .with(Connective::from_fn("neg", 1, domain, |a| top - a[0] + 1)?)?
            .with(Connective::from_fn("and", 2, domain, |a| a[0].min(a[1]))?)?
            .with(Connective::from_fn("or", 2, domain, |a| a[0].max(a[1]))?)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parser::render_signature(self))
    }
}
