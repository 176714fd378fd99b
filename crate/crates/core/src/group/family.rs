use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::octonion::Unit;

/// Which 2×2 block of the 3×3 matrix an `SL(2,𝕆)` embedding acts on.
/// Types II and III are cyclic relabellings of type I.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BlockType {
    I,
    II,
    III,
}

impl BlockType {
    pub const ALL: [BlockType; 3] = [BlockType::I, BlockType::II, BlockType::III];

    /// Index relabelling applied to a type-I matrix.
    pub fn permutation(self) -> [usize; 3] {
        match self {
            BlockType::I => [0, 1, 2],
            BlockType::II => [1, 2, 0],
            BlockType::III => [2, 0, 1],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BlockType::I => "I",
            BlockType::II => "II",
            BlockType::III => "III",
        }
    }

    fn parse(s: &str) -> Option<BlockType> {
        BlockType::ALL.into_iter().find(|b| b.name() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RotationPlane {
    XY,
    YZ,
    ZX,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoostAxis {
    TZ,
    TX,
    TY,
}

/// The three constructions of one-parameter `G₂` subgroups. Each rotates
/// the three quaternionic pairs "pointing to" a target unit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum G2Class {
    /// Target `u ≠ ℓ`; the two pairs without ℓ rotate oppositely. Fixes ℓ.
    One,
    /// Target `u ≠ ℓ`; the two pairs without ℓ rotate by α, the pair
    /// containing ℓ by −2α. Moves ℓ.
    Two,
    /// Target ℓ; two pairs rotate oppositely. `first` selects
    /// `{iℓ,i}:α, {jℓ,j}:−α`, otherwise `{jℓ,j}:α, {kℓ,k}:−α`.
    Three { first: bool },
}

/// Coarse classification of a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Rotation,
    Boost,
    Phase,
    G2Class1,
    G2Class2,
    G2Class3,
}

/// A named one-parameter curve of determinant-preserving transformations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorFamily {
    /// `xy` and `yz` rotations carry a unit; `zx` does not.
    Rotation {
        plane: RotationPlane,
        block: BlockType,
        unit: Option<Unit>,
    },
    /// `ty` boosts carry a unit; `tz` and `tx` do not.
    Boost {
        axis: BoostAxis,
        block: BlockType,
        unit: Option<Unit>,
    },
    Phase {
        block: BlockType,
        unit: Unit,
    },
    G2 {
        class: G2Class,
        target: Unit,
    },
}

impl GeneratorFamily {
    pub fn xy(block: BlockType, unit: Unit) -> Self {
        GeneratorFamily::Rotation {
            plane: RotationPlane::XY,
            block,
            unit: Some(unit),
        }
    }

    pub fn yz(block: BlockType, unit: Unit) -> Self {
        GeneratorFamily::Rotation {
            plane: RotationPlane::YZ,
            block,
            unit: Some(unit),
        }
    }

    pub fn zx(block: BlockType) -> Self {
        GeneratorFamily::Rotation {
            plane: RotationPlane::ZX,
            block,
            unit: None,
        }
    }

    pub fn tz(block: BlockType) -> Self {
        GeneratorFamily::Boost {
            axis: BoostAxis::TZ,
            block,
            unit: None,
        }
    }

    pub fn tx(block: BlockType) -> Self {
        GeneratorFamily::Boost {
            axis: BoostAxis::TX,
            block,
            unit: None,
        }
    }

    pub fn ty(block: BlockType, unit: Unit) -> Self {
        GeneratorFamily::Boost {
            axis: BoostAxis::TY,
            block,
            unit: Some(unit),
        }
    }

    pub fn phase(block: BlockType, unit: Unit) -> Self {
        GeneratorFamily::Phase { block, unit }
    }

    /// Class 1 and 2 require `target ≠ ℓ`.
    pub fn g2(class: G2Class, target: Unit) -> Option<Self> {
        let ok = match class {
            G2Class::One | G2Class::Two => target != Unit::L,
            G2Class::Three { .. } => target == Unit::L,
        };
        ok.then_some(GeneratorFamily::G2 { class, target })
    }

    pub fn kind(&self) -> FamilyKind {
        match self {
            GeneratorFamily::Rotation { .. } => FamilyKind::Rotation,
            GeneratorFamily::Boost { .. } => FamilyKind::Boost,
            GeneratorFamily::Phase { .. } => FamilyKind::Phase,
            GeneratorFamily::G2 { class, .. } => match class {
                G2Class::One => FamilyKind::G2Class1,
                G2Class::Two => FamilyKind::G2Class2,
                G2Class::Three { .. } => FamilyKind::G2Class3,
            },
        }
    }

    pub fn block_type(&self) -> Option<BlockType> {
        match *self {
            GeneratorFamily::Rotation { block, .. }
            | GeneratorFamily::Boost { block, .. }
            | GeneratorFamily::Phase { block, .. } => Some(block),
            GeneratorFamily::G2 { .. } => None,
        }
    }

    pub fn unit(&self) -> Option<Unit> {
        match *self {
            GeneratorFamily::Rotation { unit, .. } | GeneratorFamily::Boost { unit, .. } => unit,
            GeneratorFamily::Phase { unit, .. } => Some(unit),
            GeneratorFamily::G2 { .. } => None,
        }
    }

    /// For `G₂` families, the unit the rotated pairs point to.
    pub fn target_unit(&self) -> Option<Unit> {
        match *self {
            GeneratorFamily::G2 { target, .. } => Some(target),
            _ => None,
        }
    }

    pub fn is_boost(&self) -> bool {
        self.kind() == FamilyKind::Boost
    }

    pub fn is_g2(&self) -> bool {
        matches!(self, GeneratorFamily::G2 { .. })
    }

    /// `G₂` families that fix ℓ, which together span `SU(3)`.
    pub fn fixes_l(&self) -> bool {
        matches!(
            self,
            GeneratorFamily::G2 {
                class: G2Class::One | G2Class::Three { .. },
                ..
            }
        )
    }

    /// Stable string id, e.g. `rot:xy:l`, `rot:yz:II:kl`, `boost:tz:I`,
    /// `phase:kl`, `g2:c2:kl`, `g2:c3:a`.
    pub fn id(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for GeneratorFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GeneratorFamily::Rotation { plane, block, unit } => {
                let plane = match plane {
                    RotationPlane::XY => "xy",
                    RotationPlane::YZ => "yz",
                    RotationPlane::ZX => "zx",
                };
                write!(f, "rot:{plane}")?;
                if !(plane == "xy" && block == BlockType::I) {
                    write!(f, ":{}", block.name())?;
                }
                if let Some(u) = unit {
                    write!(f, ":{}", u.name())?;
                }
                Ok(())
            }
            GeneratorFamily::Boost { axis, block, unit } => {
                let axis = match axis {
                    BoostAxis::TZ => "tz",
                    BoostAxis::TX => "tx",
                    BoostAxis::TY => "ty",
                };
                write!(f, "boost:{axis}:{}", block.name())?;
                if let Some(u) = unit {
                    write!(f, ":{}", u.name())?;
                }
                Ok(())
            }
            GeneratorFamily::Phase { block, unit } => {
                write!(f, "phase")?;
                if block != BlockType::I {
                    write!(f, ":{}", block.name())?;
                }
                write!(f, ":{}", unit.name())
            }
            GeneratorFamily::G2 { class, target } => match class {
                G2Class::One => write!(f, "g2:c1:{}", target.name()),
                G2Class::Two => write!(f, "g2:c2:{}", target.name()),
                G2Class::Three { first: true } => write!(f, "g2:c3:a"),
                G2Class::Three { first: false } => write!(f, "g2:c3:b"),
            },
        }
    }
}

impl FromStr for GeneratorFamily {
    type Err = Error;

    /// Accepts the canonical ids plus an optional block type wherever the
    /// canonical form leaves type I implicit.
    fn from_str(id: &str) -> Result<Self, Error> {
        let bad = || Error::UnknownFamily(id.to_string());
        let parts: Vec<&str> = id.split(':').collect();
        let unit = |s: &str| Unit::parse(s).ok_or_else(bad);
        // splits an optional block token off the front
        let blocked = |rest: &[&str]| -> (BlockType, Vec<String>) {
            match rest.first().and_then(|s| BlockType::parse(s)) {
                Some(b) => (b, rest[1..].iter().map(|s| s.to_string()).collect()),
                None => (BlockType::I, rest.iter().map(|s| s.to_string()).collect()),
            }
        };
        let fam = match parts.as_slice() {
            ["rot", plane, rest @ ..] => {
                let (block, rest) = blocked(rest);
                match (*plane, rest.as_slice()) {
                    ("xy", [u]) => GeneratorFamily::xy(block, unit(u)?),
                    ("yz", [u]) => GeneratorFamily::yz(block, unit(u)?),
                    ("zx", []) => GeneratorFamily::zx(block),
                    _ => return Err(bad()),
                }
            }
            ["boost", axis, rest @ ..] => {
                let (block, rest) = blocked(rest);
                match (*axis, rest.as_slice()) {
                    ("tz", []) => GeneratorFamily::tz(block),
                    ("tx", []) => GeneratorFamily::tx(block),
                    ("ty", [u]) => GeneratorFamily::ty(block, unit(u)?),
                    _ => return Err(bad()),
                }
            }
            ["phase", rest @ ..] => {
                let (block, rest) = blocked(rest);
                match rest.as_slice() {
                    [u] => GeneratorFamily::phase(block, unit(u)?),
                    _ => return Err(bad()),
                }
            }
            ["g2", "c1", u] => GeneratorFamily::g2(G2Class::One, unit(u)?).ok_or_else(bad)?,
            ["g2", "c2", u] => GeneratorFamily::g2(G2Class::Two, unit(u)?).ok_or_else(bad)?,
            ["g2", "c3", "a"] => GeneratorFamily::G2 {
                class: G2Class::Three { first: true },
                target: Unit::L,
            },
            ["g2", "c3", "b"] => GeneratorFamily::G2 {
                class: G2Class::Three { first: false },
                target: Unit::L,
            },
            _ => return Err(bad()),
        };
        Ok(fam)
    }
}

const NON_L: [Unit; 6] = [Unit::I, Unit::J, Unit::K, Unit::KL, Unit::JL, Unit::IL];

/// The 14 `G₂` families: classes 1 and 2 for each unit other than ℓ, and
/// two class-3 families pointing to ℓ.
pub fn g2_families() -> Vec<GeneratorFamily> {
    let mut out: Vec<_> = NON_L
        .iter()
        .map(|&u| GeneratorFamily::G2 { class: G2Class::One, target: u })
        .collect();
    out.extend(NON_L.iter().map(|&u| GeneratorFamily::G2 { class: G2Class::Two, target: u }));
    out.extend([true, false].map(|first| GeneratorFamily::G2 {
        class: G2Class::Three { first },
        target: Unit::L,
    }));
    out
}

/// One block's copy of the rotations from `SO(8)` to `SO(9)` and the nine
/// boosts of `SO(9,1)`.
fn so9_rotations(block: BlockType) -> impl Iterator<Item = GeneratorFamily> {
    Unit::ALL
        .into_iter()
        .map(move |u| GeneratorFamily::yz(block, u))
        .chain(std::iter::once(GeneratorFamily::zx(block)))
}

fn boosts(block: BlockType, with_tz: bool) -> impl Iterator<Item = GeneratorFamily> {
    with_tz
        .then(|| GeneratorFamily::tz(block))
        .into_iter()
        .chain(std::iter::once(GeneratorFamily::tx(block)))
        .chain(Unit::ALL.into_iter().map(move |u| GeneratorFamily::ty(block, u)))
}

/// The 78 basis families of `E₆`:
/// 14 `G₂` + 7 `xy` rotations + 7 phases (together `SO(8)`),
/// 3×8 rotations to `SO(9)`, and 3×9 − 1 boosts (the type-III `tz`
/// boost is dropped as dependent).
pub fn catalog() -> Vec<GeneratorFamily> {
    let mut out = g2_families();
    out.extend(Unit::ALL.map(|u| GeneratorFamily::xy(BlockType::I, u)));
    out.extend(Unit::ALL.map(|u| GeneratorFamily::phase(BlockType::I, u)));
    for block in BlockType::ALL {
        out.extend(so9_rotations(block));
    }
    for block in BlockType::ALL {
        out.extend(boosts(block, block != BlockType::III));
    }
    out
}

/// `SO(8)` as labelled by one block type: `G₂`, that block's `xy`
/// rotations and phases.
pub fn so8_copy(block: BlockType) -> Vec<GeneratorFamily> {
    let mut out = g2_families();
    out.extend(Unit::ALL.map(|u| GeneratorFamily::xy(block, u)));
    out.extend(Unit::ALL.map(|u| GeneratorFamily::phase(block, u)));
    out
}

/// Three full copies of the 45 `SL(2,𝕆)` families, one per block type,
/// before removing duplicates: 135 families.
pub fn naive_generators() -> Vec<GeneratorFamily> {
    let mut out = Vec::with_capacity(135);
    for block in BlockType::ALL {
        out.extend(Unit::ALL.map(|u| GeneratorFamily::xy(block, u)));
        out.extend(so9_rotations(block));
        out.extend(boosts(block, true));
        out.extend(g2_families());
        out.extend(Unit::ALL.map(|u| GeneratorFamily::phase(block, u)));
    }
    out
}
