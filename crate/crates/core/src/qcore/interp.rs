use alloc::vec::Vec;

use super::XPoly;
use crate::arith::QRatFunc;
use crate::error::{Error, Result};

/// The unique polynomial of degree below `nodes.len()` through the given
/// points, from a divided-difference table over `Q(q)`.
pub fn newton_interpolate(nodes: &[QRatFunc], values: &[QRatFunc]) -> Result<XPoly> {
    if nodes.len() != values.len() {
        return Err(Error::LengthMismatch { nodes: nodes.len(), values: values.len() });
    }
    for i in 0..nodes.len() {
        for j in i + 1..nodes.len() {
            if nodes[i] == nodes[j] {
                return Err(Error::RepeatedNode(i, j));
            }
        }
    }
    // in-place table: after pass `level`, dd[i] = f[b_{i-level}, ..., b_i]
    let mut dd: Vec<QRatFunc> = values.to_vec();
    for level in 1..nodes.len() {
        for i in (level..nodes.len()).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &nodes[i] - &nodes[i - level];
            dd[i] = num.checked_div(&den)?;
        }
    }
    let mut acc = XPoly::zero();
    for i in (0..nodes.len()).rev() {
        let factor = XPoly::linear(-&nodes[i], QRatFunc::one());
        acc = &(&acc * &factor) + &XPoly::constant(dd[i].clone());
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_interpolants() {
        let five = QRatFunc::from_int(5);
        assert_eq!(newton_interpolate(&[QRatFunc::zero()], core::slice::from_ref(&five)).unwrap(), XPoly::constant(five));
        let p = newton_interpolate(&[QRatFunc::zero(), QRatFunc::one()], &[QRatFunc::zero(), QRatFunc::one()]).unwrap();
        assert_eq!(p, XPoly::x());
    }

    #[test]
    fn rejects_bad_input() {
        let z = QRatFunc::zero();
        assert_eq!(
            newton_interpolate(&[z.clone(), QRatFunc::q(), z.clone()], &[z.clone(), z.clone(), z.clone()]),
            Err(Error::RepeatedNode(0, 2))
        );
        assert_eq!(
            newton_interpolate(core::slice::from_ref(&z), &[]),
            Err(Error::LengthMismatch { nodes: 1, values: 0 })
        );
        assert_eq!(newton_interpolate(&[], &[]).unwrap(), XPoly::zero());
    }
}
