use super::finite::FFElem;
use super::ResidueError;

/// Quadratic tame symbol `(a, b)` at an odd place.
///
/// `a = π^{va}·u_a`, `b = π^{vb}·u_b` for a uniformizer `π`, and `a_res`,
/// `b_res` are the residues of the units. The value is the quadratic
/// character of `(−1)^{va·vb} · u_a^{vb} · u_b^{−va}` in the residue field.
pub fn tame_symbol(va: i64, a_res: &FFElem, vb: i64, b_res: &FFElem) -> Result<i8, ResidueError> {
    if a_res.field().p() == 2 {
        return Err(ResidueError::EvenCharacteristic);
    }
    if a_res.is_zero() || b_res.is_zero() {
        return Err(ResidueError::Zero);
    }
    let pow = |x: &FFElem, e: i64| -> Result<FFElem, ResidueError> {
        let base = if e < 0 { x.inv()? } else { x.clone() };
        Ok(base.pow(e.unsigned_abs() as u128))
    };
    let mut c = pow(a_res, vb)?.mul(&pow(b_res, -va)?);
    if (va * vb).rem_euclid(2) == 1 {
        c = c.neg();
    }
    Ok(if c.is_square()? { 1 } else { -1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ModPoly;
    use crate::residue::FiniteField;

    #[test]
    fn unramified_symbols_are_trivial() {
        let f5 = FiniteField::prime(5).unwrap();
        for a in 1..5 {
            for b in 1..5 {
                let s = tame_symbol(0, &FFElem::from_int(&f5, a), 0, &FFElem::from_int(&f5, b)).unwrap();
                assert_eq!(s, 1);
            }
        }
    }

    #[test]
    fn uniformizer_against_nonsquare_unit() {
        let f7 = FiniteField::prime(7).unwrap();
        let one = FFElem::one(&f7);
        assert_eq!(tame_symbol(1, &one, 0, &FFElem::from_int(&f7, 3)).unwrap(), -1);
        assert_eq!(tame_symbol(1, &one, 0, &FFElem::from_int(&f7, 2)).unwrap(), 1);
    }

    #[test]
    fn local_data_of_the_quaternion_example() {
        // At 3: residue field F_3(η), η² = −1, b̄ = 1 − η a unit, a a prime element.
        let f9 = FiniteField::new(ModPoly::from_i64(3, &[1, 0, 1])).unwrap();
        let b = FFElem::one(&f9).sub(&FFElem::gen(&f9));
        assert_eq!(tame_symbol(1, &FFElem::one(&f9), 0, &b).unwrap(), -1);
        // At 7: residue field F_7(θ), θ² = 3, ā = 3 + θ a unit, b a prime element.
        let f49 = FiniteField::new(ModPoly::from_i64(7, &[-3, 0, 1])).unwrap();
        let a = FFElem::from_int(&f49, 3).add(&FFElem::gen(&f49));
        assert_eq!(tame_symbol(0, &a, 1, &FFElem::one(&f49)).unwrap(), -1);
    }

    #[test]
    fn even_characteristic_rejected() {
        let f2 = FiniteField::prime(2).unwrap();
        let one = FFElem::one(&f2);
        assert_eq!(tame_symbol(1, &one, 0, &one), Err(ResidueError::EvenCharacteristic));
    }
}
