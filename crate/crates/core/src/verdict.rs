//! Outcome of one theorem check.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relationship {
    Iff,
    Implies,
    SubgroupEmbedding,
    Isomorphism,
    Emptiness,
}

impl Relationship {
    /// Whether `lhs` and `rhs` satisfy the relationship. For the structural
    /// relationships `lhs` is the computed side and `rhs` the claimed one.
    pub fn satisfied(self, lhs: bool, rhs: bool) -> bool {
        match self {
            Relationship::Implies => !lhs || rhs,
            _ => lhs == rhs,
        }
    }
}

/// Data sufficient to replay an instance with the public operations.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Evidence {
    pub group: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub elements: Vec<usize>,
    pub detail: String,
}

impl Evidence {
    pub fn new(group: impl Into<String>, detail: impl Into<String>) -> Self {
        Self { group: group.into(), detail: detail.into(), ..Self::default() }
    }

    pub fn with_map(mut self, images: &[usize]) -> Self {
        self.map = Some(images.to_vec());
        self
    }

    pub fn with_elements(mut self, elements: impl IntoIterator<Item = usize>) -> Self {
        self.elements = elements.into_iter().collect();
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub theorem_id: String,
    pub inputs: String,
    pub relationship: Relationship,
    pub lhs: bool,
    pub rhs: bool,
    pub holds: bool,
    /// The quantification domain was empty.
    #[serde(default)]
    pub vacuous: bool,
    /// Only part of the claimed domain was scanned.
    #[serde(default)]
    pub restricted: bool,
    /// Set when the check could not run; such verdicts are neither holds nor failures.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    #[serde(default)]
    pub instances: usize,
    #[serde(default)]
    pub disagreements: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Evidence>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Evidence>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<Verdict>,
}

impl Verdict {
    /// A single-instance verdict.
    pub fn single(
        theorem_id: impl Into<String>,
        inputs: impl Into<String>,
        relationship: Relationship,
        lhs: bool,
        rhs: bool,
        evidence: Evidence,
    ) -> Self {
        let holds = relationship.satisfied(lhs, rhs);
        let (witness, counterexample) = if holds { (Some(evidence), None) } else { (None, Some(evidence)) };
        Self {
            theorem_id: theorem_id.into(),
            inputs: inputs.into(),
            relationship,
            lhs,
            rhs,
            holds,
            vacuous: false,
            restricted: false,
            skipped: None,
            instances: 1,
            disagreements: usize::from(!holds),
            witness,
            counterexample,
            notes: Vec::new(),
            parts: Vec::new(),
        }
    }

    pub fn skipped(theorem_id: impl Into<String>, inputs: impl Into<String>, reason: impl Into<String>) -> Self {
        Self {
            theorem_id: theorem_id.into(),
            inputs: inputs.into(),
            relationship: Relationship::Iff,
            lhs: false,
            rhs: false,
            holds: false,
            vacuous: false,
            restricted: false,
            skipped: Some(reason.into()),
            instances: 0,
            disagreements: 0,
            witness: None,
            counterexample: None,
            notes: Vec::new(),
            parts: Vec::new(),
        }
    }

    /// Combines part verdicts: holds iff every non-skipped part holds.
    pub fn composite(
        theorem_id: impl Into<String>,
        inputs: impl Into<String>,
        relationship: Relationship,
        parts: Vec<Verdict>,
    ) -> Self {
        let active: Vec<&Verdict> = parts.iter().filter(|p| p.skipped.is_none()).collect();
        let holds = active.iter().all(|p| p.holds);
        let vacuous = !active.is_empty() && active.iter().all(|p| p.vacuous);
        let restricted = active.iter().any(|p| p.restricted);
        let instances = active.iter().map(|p| p.instances).sum();
        let disagreements = active.iter().map(|p| p.disagreements).sum();
        let first_bad = active.iter().find(|p| !p.holds);
        let counterexample = first_bad.and_then(|p| p.counterexample.clone());
        let witness = if holds { active.iter().find_map(|p| p.witness.clone()) } else { None };
        let (lhs, rhs) = match first_bad {
            Some(p) => (p.lhs, p.rhs),
            None => (true, true),
        };
        let none_active = active.is_empty();
        let mut v = Self {
            theorem_id: theorem_id.into(),
            inputs: inputs.into(),
            relationship,
            lhs,
            rhs,
            holds,
            vacuous,
            restricted,
            skipped: None,
            instances,
            disagreements,
            witness,
            counterexample,
            notes: Vec::new(),
            parts,
        };
        if none_active {
            v.skipped = Some("every part was skipped".into());
            v.holds = false;
        }
        v
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn restricted(mut self) -> Self {
        self.restricted = true;
        self
    }

    pub fn is_skipped(&self) -> bool {
        self.skipped.is_some()
    }

    pub fn failed(&self) -> bool {
        self.skipped.is_none() && !self.holds
    }

    /// Depth-first search for a part with the given id.
    pub fn find_part(&self, id: &str) -> Option<&Verdict> {
        if self.theorem_id == id {
            return Some(self);
        }
        self.parts.iter().find_map(|p| p.find_part(id))
    }
}

/// Accumulates per-instance outcomes of a quantified claim.
#[derive(Debug)]
pub struct Tally {
    theorem_id: String,
    inputs: String,
    relationship: Relationship,
    swap_order: bool,
    instances: usize,
    disagreements: usize,
    first: Option<(bool, bool)>,
    first_bad: Option<(bool, bool)>,
    witness: Option<Evidence>,
    counterexample: Option<Evidence>,
}

impl Tally {
    pub fn new(theorem_id: impl Into<String>, inputs: impl Into<String>, relationship: Relationship) -> Self {
        Self {
            theorem_id: theorem_id.into(),
            inputs: inputs.into(),
            relationship,
            swap_order: false,
            instances: 0,
            disagreements: 0,
            first: None,
            first_bad: None,
            witness: None,
            counterexample: None,
        }
    }

    /// Evaluate the right-hand side before the left-hand side.
    pub fn swapped(mut self, swap: bool) -> Self {
        self.swap_order = swap;
        self
    }

    /// Records one instance. Both sides are closures so that their
    /// evaluation order is controlled here; evidence is built lazily.
    pub fn check(
        &mut self,
        lhs: impl FnOnce() -> bool,
        rhs: impl FnOnce() -> bool,
        evidence: impl FnOnce() -> Evidence,
    ) -> bool {
        let (l, r) = if self.swap_order {
            let r = rhs();
            (lhs(), r)
        } else {
            let l = lhs();
            (l, rhs())
        };
        self.record(l, r, evidence)
    }

    pub fn record(&mut self, lhs: bool, rhs: bool, evidence: impl FnOnce() -> Evidence) -> bool {
        self.instances += 1;
        self.first.get_or_insert((lhs, rhs));
        let ok = self.relationship.satisfied(lhs, rhs);
        if ok {
            if self.witness.is_none() && self.counterexample.is_none() {
                self.witness = Some(evidence());
            }
        } else {
            self.disagreements += 1;
            if self.counterexample.is_none() {
                self.first_bad = Some((lhs, rhs));
                self.counterexample = Some(evidence());
                self.witness = None;
            }
        }
        ok
    }

    pub fn finish(self) -> Verdict {
        let vacuous = self.instances == 0;
        let holds = self.disagreements == 0;
        let (lhs, rhs) = self.first_bad.or(self.first).unwrap_or((true, true));
        Verdict {
            theorem_id: self.theorem_id,
            inputs: self.inputs,
            relationship: self.relationship,
            lhs,
            rhs,
            holds,
            vacuous,
            restricted: false,
            skipped: None,
            instances: self.instances,
            disagreements: self.disagreements,
            witness: if holds { self.witness } else { None },
            counterexample: self.counterexample,
            notes: if vacuous { vec!["empty quantification domain".into()] } else { Vec::new() },
            parts: Vec::new(),
        }
    }
}
