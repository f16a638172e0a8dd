use crate::abelian::{cartan_type, CartanType, LiftingSpec, YDDatum};
use crate::error::{Error, Result};
use crate::exactnum::Cyclotomic;
use crate::rewrite::{lifting_quotient, lifting_relations, Algebra, Element, VCoefficient};

/// The cyclic datum of order 49: `g1 = g`, `g2 = g⁴`, `χ1 = χ⁷`, `χ2 = χ¹⁴`
/// for a generator `χ` of the character group, so `q` has order 7.
pub fn is_z49_datum(d: &YDDatum) -> bool {
    let grp = d.group();
    grp.factors() == [49]
        && cartan_type(d) == CartanType::A2
        && d.n() == 7
        && grp.pow(d.g(1), 4) == *d.g(2)
        && grp.elem_order(d.g(1)) == 49
        && d.chi(1).pow(2) == *d.chi(2)
}

/// Whether `A(λ1)` and `A(λ2)` (μ1 = μ2 = 1) over the Z49 datum admit a
/// Hopf map fixing the grouplikes. Such a map sends `xᵢ` to `αᵢ xᵢ`
/// (the skew-primitives of the right type are one-dimensional), and the
/// relations `xᵢ⁷ = gᵢ⁷ − 1` force `αᵢ⁷ = 1`; every such rescaling is
/// tried against every defining relation.
pub fn a2_isomorphism_probe(lambda1: &Cyclotomic, lambda2: &Cyclotomic, datum: &YDDatum) -> Result<bool> {
    if !is_z49_datum(datum) {
        return Err(Error::WrongDatum("the probe needs the order-49 cyclic A2 datum".into()));
    }
    let zero = Cyclotomic::zero();
    let source = LiftingSpec::a2(datum, 1, 1, lambda1.clone(), zero.clone(), zero.clone());
    let target = LiftingSpec::a2(datum, 1, 1, lambda2.clone(), zero.clone(), zero);
    source.ensure_admissible()?;
    target.ensure_admissible()?;
    let vcoef = VCoefficient::QSquaredMinusOne;
    let (_, rels) = lifting_relations(&source, vcoef)?;
    let alg = Algebra::new(lifting_quotient(&target, vcoef)?);
    let (x1, z, x2) = (0u8, 1u8, 2u8);
    for a in 0..7 {
        for b in 0..7 {
            let alpha = datum.root(7 * a);
            let beta = datum.root(7 * b);
            let scaled = |e: &Element| -> Element {
                e.iter()
                    .map(|(m, c)| {
                        let count = |x: u8| m.word.iter().filter(|&&y| y == x).count() as u64;
                        let s = &alpha.powu(count(x1) + count(z)) * &beta.powu(count(x2) + count(z));
                        (m.clone(), c * &s)
                    })
                    .collect()
            };
            if rels.iter().all(|(_, r)| alg.reduce(&scaled(r)).is_zero()) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}
