//! Quandles built on the carrier of a finite group.
//!
//! Every constructor keeps the group's element numbering, so a map of the
//! group can be tested directly as a map of the quandle.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::config::Caps;
use crate::group::{FiniteGroup, GroupError};
use crate::maps::{enumerate_aaut, enumerate_aut, inversion_map, satisfies_anti_law, satisfies_hom_law, MapError, PointMap};
use crate::quandle::{Quandle, QuandleError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{kind} requires the parameter `{param}`")]
    MissingParameter { kind: QuandleKind, param: &'static str },
    #[error("{kind} does not take the parameter `{param}`")]
    UnexpectedParameter { kind: QuandleKind, param: String },
    #[error("invalid value for `{param}`: {value}")]
    BadParameter { param: String, value: String },
    #[error("unknown quandle kind `{0}`")]
    UnknownKind(String),
    #[error("{0} is built from a group, but none was given")]
    MissingGroup(QuandleKind),
    #[error("{kind} needs a map satisfying the {expected} law")]
    WrongMapKind { kind: QuandleKind, expected: &'static str },
    #[error("compatibility x psi(y) x^-1 = psi(x y x^-1) fails at x={x}, y={y}")]
    CompatibilityFail { x: usize, y: usize },
    #[error("map is not an automorphism of the group")]
    NotAutomorphism,
    #[error("map index {index} is out of range ({count} maps)")]
    NoSuchMap { index: usize, count: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error("axiom check failed: {0}")]
    AxiomFail(#[from] QuandleError),
}

/// `y⁻ᵐ x yᵐ`.
pub fn conj_m(g: &FiniteGroup, m: i64) -> Result<Quandle, ConstructionError> {
    let pos: Vec<usize> = g.elements().map(|y| g.power(y, m)).collect();
    let neg: Vec<usize> = pos.iter().map(|&p| g.inv(p)).collect();
    table(g, format!("Conj_{m}({})", g.label()), |x, y| g.product(&[neg[y], x, pos[y]]))
}

/// `y x⁻¹ y`.
pub fn core(g: &FiniteGroup) -> Result<Quandle, ConstructionError> {
    table(g, format!("Core({})", g.label()), |x, y| g.product(&[y, g.inv(x), y]))
}

/// `Rₙ`: `i ∗ j = 2j − i mod n`.
pub fn dihedral_quandle(n: usize) -> Result<Quandle, ConstructionError> {
    if n == 0 {
        return Err(QuandleError::Empty.into());
    }
    let op = (0..n).flat_map(|i| (0..n).map(move |j| (2 * j + n - i) % n)).collect();
    Ok(Quandle::from_flat(n, op, Some(format!("R{n}")))?)
}

/// `φ(x y⁻¹) y` for an automorphism `φ`.
pub fn alex(g: &FiniteGroup, phi: &PointMap) -> Result<Quandle, ConstructionError> {
    require_hom(g, phi)?;
    table(g, format!("Alex({},{:?})", g.label(), phi), |x, y| g.mul(phi.apply(g.mul(x, g.inv(y))), y))
}

/// `y φ(y⁻¹ x)` for an automorphism `φ`.
pub fn q1(g: &FiniteGroup, phi: &PointMap) -> Result<Quandle, ConstructionError> {
    if !satisfies_hom_law(g, phi) {
        return Err(ConstructionError::WrongMapKind { kind: QuandleKind::Q1, expected: "automorphism" });
    }
    table(g, format!("Q1({},{:?})", g.label(), phi), |x, y| g.mul(y, phi.apply(g.mul(g.inv(y), x))))
}

/// `y ψ(y x⁻¹)` for an antiautomorphism `ψ`.
pub fn q2(g: &FiniteGroup, psi: &PointMap) -> Result<Quandle, ConstructionError> {
    require_anti(g, psi, QuandleKind::Q2)?;
    table(g, format!("Q2({},{:?})", g.label(), psi), |x, y| g.mul(y, psi.apply(g.mul(y, g.inv(x)))))
}

/// `ψ(x y⁻¹) y` for an antiautomorphism `ψ` with `x ψ(y) x⁻¹ = ψ(x y x⁻¹)`.
pub fn q3(g: &FiniteGroup, psi: &PointMap) -> Result<Quandle, ConstructionError> {
    require_anti(g, psi, QuandleKind::Q3)?;
    require_compatible(g, psi)?;
    table(g, format!("Q3({},{:?})", g.label(), psi), |x, y| g.mul(psi.apply(g.mul(x, g.inv(y))), y))
}

/// `y ψ(y⁻¹ x)` for an antiautomorphism `ψ` with `x ψ(y) x⁻¹ = ψ(x y x⁻¹)`.
pub fn q4(g: &FiniteGroup, psi: &PointMap) -> Result<Quandle, ConstructionError> {
    require_anti(g, psi, QuandleKind::Q4)?;
    require_compatible(g, psi)?;
    table(g, format!("Q4({},{:?})", g.label(), psi), |x, y| g.mul(y, psi.apply(g.mul(g.inv(y), x))))
}

/// `y c⁻¹ y⁻¹ x c`.
pub fn p1(g: &FiniteGroup, c: usize) -> Result<Quandle, ConstructionError> {
    verbal(g, c, 1, |ci, x, y, yi| g.product(&[y, ci, yi, x, c]))
}

/// `y c⁻¹ x y⁻¹ c`.
pub fn p2(g: &FiniteGroup, c: usize) -> Result<Quandle, ConstructionError> {
    verbal(g, c, 2, |ci, x, y, yi| g.product(&[y, ci, x, yi, c]))
}

/// `c⁻¹ y⁻¹ x c y`.
pub fn p3(g: &FiniteGroup, c: usize) -> Result<Quandle, ConstructionError> {
    verbal(g, c, 3, |ci, x, y, yi| g.product(&[ci, yi, x, c, y]))
}

/// `c⁻¹ x y⁻¹ c y`.
pub fn p4(g: &FiniteGroup, c: usize) -> Result<Quandle, ConstructionError> {
    verbal(g, c, 4, |ci, x, y, yi| g.product(&[ci, x, yi, c, y]))
}

/// `pᵢ(G, c)` for `i` in `1..=4`.
pub fn verbal_quandle(g: &FiniteGroup, i: usize, c: usize) -> Result<Quandle, ConstructionError> {
    match i {
        1 => p1(g, c),
        2 => p2(g, c),
        3 => p3(g, c),
        4 => p4(g, c),
        _ => Err(ConstructionError::BadParameter { param: "i".into(), value: i.to_string() }),
    }
}

/// `qᵢ(G, map)` for `i` in `1..=4`.
pub fn q_quandle(g: &FiniteGroup, i: usize, map: &PointMap) -> Result<Quandle, ConstructionError> {
    match i {
        1 => q1(g, map),
        2 => q2(g, map),
        3 => q3(g, map),
        4 => q4(g, map),
        _ => Err(ConstructionError::BadParameter { param: "i".into(), value: i.to_string() }),
    }
}

fn verbal(
    g: &FiniteGroup,
    c: usize,
    i: usize,
    word: impl Fn(usize, usize, usize, usize) -> usize,
) -> Result<Quandle, ConstructionError> {
    g.check_element(c)?;
    let ci = g.inv(c);
    table(g, format!("P{i}({},c={c})", g.label()), |x, y| word(ci, x, y, g.inv(y)))
}

fn table(g: &FiniteGroup, name: String, op: impl Fn(usize, usize) -> usize) -> Result<Quandle, ConstructionError> {
    let n = g.order();
    let flat = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).map(|(x, y)| op(x, y)).collect();
    Ok(Quandle::from_flat(n, flat, Some(name))?)
}

fn require_hom(g: &FiniteGroup, phi: &PointMap) -> Result<(), ConstructionError> {
    if phi.len() != g.order() {
        return Err(MapError::SizeMismatch { expected: g.order(), got: phi.len() }.into());
    }
    if !satisfies_hom_law(g, phi) {
        return Err(ConstructionError::NotAutomorphism);
    }
    Ok(())
}

fn require_anti(g: &FiniteGroup, psi: &PointMap, kind: QuandleKind) -> Result<(), ConstructionError> {
    if psi.len() != g.order() {
        return Err(MapError::SizeMismatch { expected: g.order(), got: psi.len() }.into());
    }
    if !satisfies_anti_law(g, psi) {
        return Err(ConstructionError::WrongMapKind { kind, expected: "antiautomorphism" });
    }
    Ok(())
}

/// First pair `(x, y)` with `x ψ(y) x⁻¹ ≠ ψ(x y x⁻¹)`.
pub fn compatibility_witness(g: &FiniteGroup, psi: &PointMap) -> Option<(usize, usize)> {
    g.elements().flat_map(|x| g.elements().map(move |y| (x, y))).find(|&(x, y)| {
        let xi = g.inv(x);
        g.product(&[x, psi.apply(y), xi]) != psi.apply(g.product(&[x, y, xi]))
    })
}

fn require_compatible(g: &FiniteGroup, psi: &PointMap) -> Result<(), ConstructionError> {
    match compatibility_witness(g, psi) {
        Some((x, y)) => Err(ConstructionError::CompatibilityFail { x, y }),
        None => Ok(()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuandleKind {
    Trivial,
    Conj,
    Core,
    Dihedral,
    Alex,
    Q1,
    Q2,
    Q3,
    Q4,
    P1,
    P2,
    P3,
    P4,
}

impl QuandleKind {
    pub const ALL: [QuandleKind; 13] = [
        QuandleKind::Trivial,
        QuandleKind::Conj,
        QuandleKind::Core,
        QuandleKind::Dihedral,
        QuandleKind::Alex,
        QuandleKind::Q1,
        QuandleKind::Q2,
        QuandleKind::Q3,
        QuandleKind::Q4,
        QuandleKind::P1,
        QuandleKind::P2,
        QuandleKind::P3,
        QuandleKind::P4,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            QuandleKind::Trivial => "trivial",
            QuandleKind::Conj => "conj",
            QuandleKind::Core => "core",
            QuandleKind::Dihedral => "dihedral",
            QuandleKind::Alex => "alex",
            QuandleKind::Q1 => "q1",
            QuandleKind::Q2 => "q2",
            QuandleKind::Q3 => "q3",
            QuandleKind::Q4 => "q4",
            QuandleKind::P1 => "p1",
            QuandleKind::P2 => "p2",
            QuandleKind::P3 => "p3",
            QuandleKind::P4 => "p4",
        }
    }

    /// Trivial and dihedral quandles take a size instead of a group.
    pub fn needs_group(self) -> bool {
        !matches!(self, QuandleKind::Trivial | QuandleKind::Dihedral)
    }

    fn params(self) -> &'static [&'static str] {
        match self {
            QuandleKind::Trivial | QuandleKind::Dihedral => &["n"],
            QuandleKind::Conj => &["m"],
            QuandleKind::Core => &[],
            QuandleKind::Alex | QuandleKind::Q1 | QuandleKind::Q2 | QuandleKind::Q3 | QuandleKind::Q4 => &["map"],
            QuandleKind::P1 | QuandleKind::P2 | QuandleKind::P3 | QuandleKind::P4 => &["c"],
        }
    }
}

impl fmt::Display for QuandleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

impl FromStr for QuandleKind {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        QuandleKind::ALL
            .into_iter()
            .find(|k| k.keyword() == lower)
            .ok_or_else(|| ConstructionError::UnknownKind(s.to_string()))
    }
}

/// How the map parameter of `alex` and `q1`..`q4` is chosen.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MapParam {
    Identity,
    Inversion,
    /// Index into the sorted automorphism list.
    AutIndex(usize),
    /// Index into the sorted antiautomorphism list.
    AautIndex(usize),
    Images(Vec<usize>),
}

impl MapParam {
    pub fn resolve(&self, g: &FiniteGroup, caps: &Caps) -> Result<PointMap, ConstructionError> {
        let pick = |maps: Vec<crate::maps::ClassifiedMap>, index: usize| {
            let count = maps.len();
            maps.into_iter().nth(index).map(|m| m.map).ok_or(ConstructionError::NoSuchMap { index, count })
        };
        match self {
            MapParam::Identity => Ok(PointMap::identity(g.order())),
            MapParam::Inversion => Ok(inversion_map(g).map),
            MapParam::AutIndex(i) => pick(enumerate_aut(g, caps)?, *i),
            MapParam::AautIndex(i) => pick(enumerate_aaut(g, caps)?, *i),
            MapParam::Images(v) => Ok(PointMap::new(v.clone())?),
        }
    }
}

impl fmt::Display for MapParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapParam::Identity => f.write_str("id"),
            MapParam::Inversion => f.write_str("inv"),
            MapParam::AutIndex(i) => write!(f, "aut{i}"),
            MapParam::AautIndex(i) => write!(f, "aaut{i}"),
            MapParam::Images(v) => f.write_str(&v.iter().map(usize::to_string).collect::<Vec<_>>().join("/")),
        }
    }
}

impl FromStr for MapParam {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ConstructionError::BadParameter { param: "map".into(), value: s.to_string() };
        match s {
            "id" | "identity" => Ok(MapParam::Identity),
            "inv" | "inversion" | "eps" => Ok(MapParam::Inversion),
            _ => {
                if let Some(i) = s.strip_prefix("aaut") {
                    i.parse().map(MapParam::AautIndex).map_err(|_| bad())
                } else if let Some(i) = s.strip_prefix("aut") {
                    i.parse().map(MapParam::AutIndex).map_err(|_| bad())
                } else {
                    s.split('/').map(|t| t.trim().parse().map_err(|_| bad())).collect::<Result<_, _>>().map(MapParam::Images)
                }
            }
        }
    }
}

/// A quandle construction with its parameters, e.g. `conj:m=2`, `p1:c=3`,
/// `dihedral:n=5`, `alex:phi=inv` or `q2:psi=aaut1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionSpec {
    pub kind: QuandleKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<MapParam>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<usize>,
}

impl ConstructionSpec {
    pub fn new(kind: QuandleKind) -> Self {
        Self { kind, n: None, m: None, map: None, c: None }
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    pub fn with_m(mut self, m: i64) -> Self {
        self.m = Some(m);
        self
    }

    pub fn with_map(mut self, map: MapParam) -> Self {
        self.map = Some(map);
        self
    }

    pub fn with_c(mut self, c: usize) -> Self {
        self.c = Some(c);
        self
    }

    /// Every required parameter present and no foreign one.
    pub fn validate(&self) -> Result<(), ConstructionError> {
        let allowed = self.kind.params();
        let given = [("n", self.n.is_some()), ("m", self.m.is_some()), ("map", self.map.is_some()), ("c", self.c.is_some())];
        for (param, present) in given {
            if present && !allowed.contains(&param) {
                return Err(ConstructionError::UnexpectedParameter { kind: self.kind, param: param.into() });
            }
            if !present && allowed.contains(&param) {
                return Err(ConstructionError::MissingParameter { kind: self.kind, param });
            }
        }
        Ok(())
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(n) = self.n {
            parts.push(format!("n={n}"));
        }
        if let Some(m) = self.m {
            parts.push(format!("m={m}"));
        }
        if let Some(map) = &self.map {
            parts.push(format!("map={map}"));
        }
        if let Some(c) = self.c {
            parts.push(format!("c={c}"));
        }
        if parts.is_empty() {
            write!(f, "{}", self.kind)
        } else {
            write!(f, "{}:{}", self.kind, parts.join(","))
        }
    }
}

impl FromStr for ConstructionSpec {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, rest) = s.split_once(':').unwrap_or((s, ""));
        let mut spec = ConstructionSpec::new(kind.trim().parse()?);
        for item in rest.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (key, value) = item.split_once('=').ok_or_else(|| ConstructionError::BadParameter {
                param: item.to_string(),
                value: String::new(),
            })?;
            let bad = || ConstructionError::BadParameter { param: key.to_string(), value: value.to_string() };
            match key.trim() {
                "n" => spec.n = Some(value.parse().map_err(|_| bad())?),
                "m" => spec.m = Some(value.parse().map_err(|_| bad())?),
                "c" => spec.c = Some(value.parse().map_err(|_| bad())?),
                "map" | "phi" | "psi" => spec.map = Some(value.parse()?),
                other => return Err(ConstructionError::UnexpectedParameter { kind: spec.kind, param: other.to_string() }),
            }
        }
        spec.validate()?;
        Ok(spec)
    }
}

/// Builds the quandle described by `spec`. Kinds other than `trivial` and
/// `dihedral` need a group.
pub fn build(spec: &ConstructionSpec, group: Option<&FiniteGroup>, caps: &Caps) -> Result<Quandle, ConstructionError> {
    spec.validate()?;
    let kind = spec.kind;
    let g = match (kind.needs_group(), group) {
        (false, _) => None,
        (true, Some(g)) => Some(g),
        (true, None) => return Err(ConstructionError::MissingGroup(kind)),
    };
    let need = |param: &'static str| ConstructionError::MissingParameter { kind, param };
    match (kind, g) {
        (QuandleKind::Trivial, _) => Ok(Quandle::trivial(spec.n.ok_or(need("n"))?)?),
        (QuandleKind::Dihedral, _) => dihedral_quandle(spec.n.ok_or(need("n"))?),
        (QuandleKind::Conj, Some(g)) => conj_m(g, spec.m.ok_or(need("m"))?),
        (QuandleKind::Core, Some(g)) => core(g),
        (QuandleKind::Alex | QuandleKind::Q1 | QuandleKind::Q2 | QuandleKind::Q3 | QuandleKind::Q4, Some(g)) => {
            let map = spec.map.as_ref().ok_or(need("map"))?.resolve(g, caps)?;
            let q = match kind {
                QuandleKind::Alex => alex(g, &map),
                QuandleKind::Q1 => q1(g, &map),
                QuandleKind::Q2 => q2(g, &map),
                QuandleKind::Q3 => q3(g, &map),
                _ => q4(g, &map),
            }?;
            let label = spec.map.as_ref().map(ToString::to_string).unwrap_or_default();
            let prefix = match kind {
                QuandleKind::Alex => "Alex",
                QuandleKind::Q1 => "Q1",
                QuandleKind::Q2 => "Q2",
                QuandleKind::Q3 => "Q3",
                _ => "Q4",
            };
            Ok(q.with_name(format!("{prefix}({},{label})", g.label())))
        }
        (QuandleKind::P1 | QuandleKind::P2 | QuandleKind::P3 | QuandleKind::P4, Some(g)) => {
            let c = spec.c.ok_or(need("c"))?;
            let i = match kind {
                QuandleKind::P1 => 1,
                QuandleKind::P2 => 2,
                QuandleKind::P3 => 3,
                _ => 4,
            };
            verbal_quandle(g, i, c)
        }
        (_, None) => Err(ConstructionError::MissingGroup(kind)),
    }
}
