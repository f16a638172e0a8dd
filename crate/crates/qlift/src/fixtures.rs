//! Canonical fixtures. Each datum is the first `datum_search` hit that
//! satisfies a stated selection rule, so the checked-in files can be
//! regenerated and compared byte for byte.

use std::path::PathBuf;

use qlift_core::abelian::{datum_search, AbelianGroup, CartanType, LiftingSpec, YDDatum};
use qlift_core::liftings::is_z49_datum;
use qlift_core::Cyclotomic;

use crate::dto::{read_json, to_json, PresBase, PresDto, SpecDto};
use crate::error::CliError;

pub const B2_Z3Z3: &str = "b2_n3_z3z3.json";
pub const B2_Z9Z9: &str = "b2_n3_z9z9.json";
pub const A2_Z49: &str = "a2_n7_z49.json";
pub const A2_Z3Z3: &str = "a2_n3_z3z3.json";
pub const CORRUPTED: &str = "corrupted.json";

pub const SPEC_FIXTURES: [&str; 4] = [B2_Z3Z3, B2_Z9Z9, A2_Z49, A2_Z3Z3];

pub fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn int(n: i64) -> Cyclotomic {
    Cyclotomic::from_int(n)
}

fn search(factors: &[u32], kind: CartanType, n: u32, pick: impl Fn(&YDDatum) -> bool) -> YDDatum {
    let g = AbelianGroup::new(factors.to_vec()).expect("valid invariant factors");
    datum_search(&g, kind, n).into_iter().find(|d| pick(d)).expect("selection rule has a hit")
}

fn standard_generators(d: &YDDatum) -> bool {
    d.g(1) == &vec![1, 0] && d.g(2) == &vec![0, 1]
}

/// The fixture specs, by file name.
pub fn generate_spec(name: &str) -> Option<LiftingSpec> {
    let spec = match name {
        // Trivial lifting, g1 and g2 the standard generators.
        B2_Z3Z3 => LiftingSpec::zero(&search(&[3, 3], CartanType::B2, 3, standard_generators), CartanType::B2),
        // First datum admitting μ1 = μ2 = λ = γ = 1.
        B2_Z9Z9 => {
            let admits = |d: &YDDatum| LiftingSpec::b2(d, 1, 1, int(1), int(1)).admissible().is_ok();
            LiftingSpec::b2(&search(&[9, 9], CartanType::B2, 3, admits), 1, 1, int(1), int(1))
        }
        // g2 = g1⁴, χ2 = χ1², with μ1 = μ2 = λ = 1.
        A2_Z49 => LiftingSpec::a2(&search(&[49], CartanType::A2, 7, is_z49_datum), 1, 1, int(1), int(0), int(0)),
        // Standard generators, both γ nonzero.
        A2_Z3Z3 => {
            let admits =
                |d: &YDDatum| standard_generators(d) && LiftingSpec::a2(d, 0, 0, int(0), int(1), int(1)).admissible().is_ok();
            LiftingSpec::a2(&search(&[3, 3], CartanType::A2, 3, admits), 0, 0, int(0), int(1), int(1))
        }
        _ => return None,
    };
    Some(spec)
}

/// The expansion algebra with `zx = qxz` replaced by a rule that breaks
/// confluence.
pub fn corrupted() -> PresDto {
    PresDto { base: PresBase::CorruptedExpansion { q: "zeta(5)".into(), lambda: "1".into() }, relations: Vec::new() }
}

/// File contents as they should be checked in.
pub fn generate(name: &str) -> Option<String> {
    if name == CORRUPTED {
        return Some(to_json(&corrupted()));
    }
    generate_spec(name).map(|s| to_json(&SpecDto::from_spec(&s)))
}

pub fn load_spec(name: &str) -> Result<LiftingSpec, CliError> {
    read_json::<SpecDto>(&dir().join(name))?.to_spec()
}

pub fn load_pres(name: &str) -> Result<PresDto, CliError> {
    read_json(&dir().join(name))
}
