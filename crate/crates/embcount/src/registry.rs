//! The sequence registry: every named counting family and involution split,
//! addressable by token (`D6`, `B3`, `A1/A5:S`, ...), with evaluation,
//! whole-table computation, and static OEIS ids.
//!
//! Base families and `:S` splits start at 1 for `n = 0` (the empty object);
//! `:AP` splits and the nonorientable difference families start at 0. Three
//! split tokens are aliases of another token's sequence and are flagged as
//! such rather than listed twice.

use num_bigint::BigUint;

use crate::bouquets::{bouquet_count, bouquet_split, BouquetFamily};
use crate::dipoles::{dipole_count, dipole_split, DipoleFamily, DipolePair};
use crate::dirbouquets::{dirbouquet_count, dirbouquet_split, DirFamily, DirPair};
use crate::Error;

/// Which half of an involution split a token addresses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SplitPart {
    /// Objects preserved by the involution (`:S`).
    Symmetric,
    /// Pairs swapped by the involution (`:AP`).
    AsymmetricPairs,
}

impl SplitPart {
    fn suffix(self) -> &'static str {
        match self {
            SplitPart::Symmetric => "S",
            SplitPart::AsymmetricPairs => "AP",
        }
    }
}

/// One of the 21 base counting families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BaseFamily {
    Dipole(DipoleFamily),
    Bouquet(BouquetFamily),
    Dir(DirFamily),
}

/// One of the 20 involution pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PairId {
    Dipole(DipolePair),
    Bouquet,
    Dir(DirPair),
}

impl PairId {
    fn token(self) -> String {
        match self {
            PairId::Dipole(pair) => pair.token(),
            PairId::Bouquet => "B1/B2".to_string(),
            PairId::Dir(pair) => pair.token(),
        }
    }
}

/// A registered sequence: a base family or one half of a split pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Base(BaseFamily),
    Split(PairId, SplitPart),
}

impl Family {
    /// Parses a token such as `D6`, `B3`, `A1/A5:S`. Case-insensitive.
    pub fn parse(token: &str) -> Result<Family, Error> {
        let token = token.trim().to_ascii_uppercase();
        for family in Family::all() {
            if family.token() == token {
                return Ok(family);
            }
        }
        Err(Error::UnknownFamily(token))
    }

    pub fn token(&self) -> String {
        match self {
            Family::Base(BaseFamily::Dipole(f)) => f.token().to_string(),
            Family::Base(BaseFamily::Bouquet(f)) => f.token().to_string(),
            Family::Base(BaseFamily::Dir(f)) => f.token().to_string(),
            Family::Split(pair, part) => format!("{}:{}", pair.token(), part.suffix()),
        }
    }

    /// Every registered token, in catalog order: D bases, D splits, B bases,
    /// the B split, A bases, A splits.
    pub fn all() -> Vec<Family> {
        let mut out = Vec::new();
        for f in DipoleFamily::ALL {
            out.push(Family::Base(BaseFamily::Dipole(f)));
        }
        for pair in DipolePair::ALL {
            out.push(Family::Split(PairId::Dipole(pair), SplitPart::Symmetric));
            out.push(Family::Split(PairId::Dipole(pair), SplitPart::AsymmetricPairs));
        }
        for f in BouquetFamily::ALL {
            out.push(Family::Base(BaseFamily::Bouquet(f)));
        }
        out.push(Family::Split(PairId::Bouquet, SplitPart::Symmetric));
        out.push(Family::Split(PairId::Bouquet, SplitPart::AsymmetricPairs));
        for f in DirFamily::ALL {
            out.push(Family::Base(BaseFamily::Dir(f)));
        }
        for pair in DirPair::ALL {
            out.push(Family::Split(PairId::Dir(pair), SplitPart::Symmetric));
            out.push(Family::Split(PairId::Dir(pair), SplitPart::AsymmetricPairs));
        }
        out
    }

    /// The number of distinct sequences (alias tokens not double-counted).
    pub fn distinct_count() -> usize {
        Family::all().iter().filter(|f| f.alias_of().is_none()).count()
    }

    /// For the three split tokens whose sequence coincides with another
    /// registered token, the canonical token; `None` otherwise.
    pub fn alias_of(&self) -> Option<Family> {
        use DipolePair::*;
        match self {
            Family::Split(PairId::Dipole(D3D4), SplitPart::Symmetric) => Some(Family::Split(
                PairId::Dipole(D1D2),
                SplitPart::Symmetric,
            )),
            Family::Split(PairId::Dipole(D1D7), SplitPart::Symmetric) => Some(Family::Split(
                PairId::Dipole(D3D5),
                SplitPart::Symmetric,
            )),
            Family::Split(PairId::Dipole(D7D5), SplitPart::AsymmetricPairs) => Some(Family::Split(
                PairId::Dipole(D2D4),
                SplitPart::AsymmetricPairs,
            )),
            _ => None,
        }
    }

    /// Whether the family takes a color count.
    pub fn colored(&self) -> bool {
        match self {
            Family::Base(BaseFamily::Dipole(_)) | Family::Split(PairId::Dipole(_), _) => false,
            _ => true,
        }
    }

    /// Static OEIS id, where the uncolored sequence is a known entry.
    pub fn oeis(&self) -> Option<&'static str> {
        match self {
            Family::Base(BaseFamily::Dipole(DipoleFamily::D1)) => Some("A002619"),
            Family::Base(BaseFamily::Dipole(DipoleFamily::D5)) => Some("A000940"),
            Family::Base(BaseFamily::Dipole(DipoleFamily::D6)) => Some("A006841"),
            Family::Base(BaseFamily::Dipole(DipoleFamily::D7)) => Some("A000939"),
            Family::Base(BaseFamily::Bouquet(BouquetFamily::B1)) => Some("A007769"),
            Family::Base(BaseFamily::Bouquet(BouquetFamily::B2)) => Some("A054499"),
            Family::Split(PairId::Bouquet, SplitPart::Symmetric) => Some("A018191"),
            Family::Split(PairId::Bouquet, SplitPart::AsymmetricPairs) => Some("A054938"),
            Family::Base(BaseFamily::Dir(DirFamily::A1)) => Some("A061417"),
            Family::Split(PairId::Dir(DirPair::A1A5), SplitPart::Symmetric) => Some("A000085"),
            _ => None,
        }
    }

    pub fn description(&self) -> String {
        let base_desc = |b: &BaseFamily| -> &'static str {
            match b {
                BaseFamily::Dipole(DipoleFamily::D1) => "vertex-labeled oriented dipole embeddings",
                BaseFamily::Dipole(DipoleFamily::D2) => "oriented dipole embeddings",
                BaseFamily::Dipole(DipoleFamily::D3) => "vertex-labeled orientable dipole embeddings",
                BaseFamily::Dipole(DipoleFamily::D4) => "orientable dipole embeddings",
                BaseFamily::Dipole(DipoleFamily::D5) => "vertex-labeled dipolar cogs",
                BaseFamily::Dipole(DipoleFamily::D6) => "dipolar cogs",
                BaseFamily::Dipole(DipoleFamily::D7) => {
                    "permutations up to shifts and one-sided reversal"
                }
                BaseFamily::Dipole(DipoleFamily::D8) => {
                    "permutation matrices up to shifts and quarter turns"
                }
                BaseFamily::Bouquet(BouquetFamily::B1) => "oriented colored bouquet embeddings",
                BaseFamily::Bouquet(BouquetFamily::B2) => "orientable colored bouquet embeddings",
                BaseFamily::Bouquet(BouquetFamily::B3) => "generic colored bouquet embeddings",
                BaseFamily::Bouquet(BouquetFamily::B4) => "nonorientable colored bouquet embeddings",
                BaseFamily::Dir(DirFamily::A1) => "oriented directed bouquet embeddings",
                BaseFamily::Dir(DirFamily::A2) => "orientable directed bouquet embeddings",
                BaseFamily::Dir(DirFamily::A3) => "arc-reversal classes of oriented directed embeddings",
                BaseFamily::Dir(DirFamily::A4) => "arc-reversal classes of orientable directed embeddings",
                BaseFamily::Dir(DirFamily::A5) => "reflection-plus-arc-reversal classes of directed embeddings",
                BaseFamily::Dir(DirFamily::A6) => "generic directed bouquet embeddings",
                BaseFamily::Dir(DirFamily::A7) => "nonorientable directed bouquet embeddings",
                BaseFamily::Dir(DirFamily::A8) => "arc-reversal classes of generic directed embeddings",
                BaseFamily::Dir(DirFamily::A9) => "arc-reversal classes of nonorientable directed embeddings",
            }
        };
        match self {
            Family::Base(base) => base_desc(base).to_string(),
            Family::Split(pair, part) => {
                let what = match part {
                    SplitPart::Symmetric => "symmetric objects",
                    SplitPart::AsymmetricPairs => "asymmetric pairs",
                };
                format!("{what} of the {} involution", pair.token())
            }
        }
    }

    /// Evaluates the family at `n` (and `k` where the family is colored).
    ///
    /// Supplying `k` to an uncolored family is rejected; colored families
    /// default to `k = 1`.
    pub fn evaluate(&self, n: u64, k: Option<u64>) -> Result<BigUint, Error> {
        if !self.colored() && k.is_some() {
            return Err(Error::ColorsNotAccepted(self.token()));
        }
        let k = k.unwrap_or(1);
        if self.colored() && k == 0 {
            return Err(Error::ZeroColors);
        }
        let pick = |(s, ap): (BigUint, BigUint), part: &SplitPart| match part {
            SplitPart::Symmetric => s,
            SplitPart::AsymmetricPairs => ap,
        };
        Ok(match self {
            Family::Base(BaseFamily::Dipole(f)) => dipole_count(*f, n),
            Family::Base(BaseFamily::Bouquet(f)) => bouquet_count(*f, n, k),
            Family::Base(BaseFamily::Dir(f)) => dirbouquet_count(*f, n, k),
            Family::Split(PairId::Dipole(pair), part) => pick(dipole_split(*pair, n), part),
            Family::Split(PairId::Bouquet, part) => pick(bouquet_split(n, k), part),
            Family::Split(PairId::Dir(pair), part) => pick(dirbouquet_split(*pair, n, k), part),
        })
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.token())
    }
}

/// A computed table of one family for `n = 0..=n_max` (offset 0).
#[derive(Debug, Clone)]
pub struct SequenceRecord {
    pub family: Family,
    pub offset: u64,
    pub k: Option<u64>,
    pub oeis: Option<&'static str>,
    pub values: Vec<BigUint>,
}

impl SequenceRecord {
    /// JSON form with the values as full decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        let mut object = serde_json::Map::new();
        object.insert("family".into(), self.family.token().into());
        object.insert("offset".into(), self.offset.into());
        if let Some(k) = self.k {
            object.insert("k".into(), k.into());
        }
        if let Some(oeis) = self.oeis {
            object.insert("oeis".into(), oeis.into());
        }
        object.insert(
            "values".into(),
            self.values
                .iter()
                .map(|v| serde_json::Value::String(v.to_string()))
                .collect::<Vec<_>>()
                .into(),
        );
        serde_json::Value::Object(object)
    }
}

/// Evaluates `family` for every `n` up to `n_max`.
pub fn table(family: Family, n_max: u64, k: Option<u64>) -> Result<SequenceRecord, Error> {
    let values = (0..=n_max)
        .map(|n| family.evaluate(n, k))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SequenceRecord {
        family,
        offset: 0,
        k: if family.colored() {
            Some(k.unwrap_or(1))
        } else {
            None
        },
        oeis: family.oeis(),
        values,
    })
}
