use group_core::Qz;
use lifting::LiftingData;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::BrauerError;
use crate::group::{BrauerElement, BrauerGroup};
use crate::linalg::{invert, qz_to_rat, to_qz};

fn scale_big(x: Qz, c: &BigInt) -> Qz {
    let k = c.mod_floor(&BigInt::from(x.den())).to_i64().expect("reduced below the denominator");
    x.scale(k)
}

impl BrauerGroup {
    /// Restriction of `beta` from `U(G, C')` to `U(G, C)` for `C ⊆ C'`, in reduced form.
    ///
    /// `self` and `l` describe the smaller set C; `big` and `l_big` the larger one.
    pub fn restrict_from(
        &self,
        l: &LiftingData,
        big: &BrauerGroup,
        l_big: &LiftingData,
        beta: &BrauerElement,
    ) -> Result<BrauerElement, BrauerError> {
        let positions: Vec<usize> = l
            .c_classes
            .iter()
            .map(|c| l_big.c_classes.iter().position(|x| x == c).ok_or(BrauerError::ClassOutsideC(*c)))
            .collect::<Result<_, _>>()?;
        let values: Vec<Qz> = l
            .generator_words()
            .iter()
            .map(|w| Ok(big.alpha_on(l_big, beta, &l_big.word_element(w)?)))
            .collect::<Result<_, BrauerError>>()?;
        let alpha: Vec<Qz> = l
            .basis_in_generators()
            .iter()
            .map(|row| row.iter().zip(&values).map(|(c, &v)| scale_big(v, c)).sum())
            .collect();
        let psi: Vec<Qz> = positions.iter().map(|&p| beta.psi[p]).collect();

        // subtract the coboundary (f∘R, f − f∘P⁻¹) that kills α on the free part
        let f = self.free_rank;
        let k = psi.len();
        let rinv = invert(&l.r_matrix[..f]);
        let h: Vec<Qz> = (0..k).map(|c| to_qz(&(0..f).map(|i| &rinv[c][i] * qz_to_rat(alpha[i])).sum())).collect();
        let mut pinv = vec![0; k];
        for (i, &j) in self.frob.class_perm.iter().enumerate() {
            pinv[j] = i;
        }
        let psi: Vec<Qz> = (0..k).map(|c| psi[c] - (h[c] - h[pinv[c]])).collect();
        let mut reduced = alpha;
        for a in reduced.iter_mut().take(f) {
            *a = Qz::ZERO;
        }
        Ok(BrauerElement { alpha: reduced, psi: self.reduce_psi(&psi) })
    }
}
