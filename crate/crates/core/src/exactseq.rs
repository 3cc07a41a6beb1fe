//! Localization-sequence engine. Given the three-term piece
//! `Z_p --iota--> K_0(middle) --pi--> Z_(p+1)`, the Chow group is the image of
//! `iota`; given the `K_1` boundary of the long exact sequence, it is the
//! cokernel of that boundary.

use num_bigint::BigInt;

use crate::abgroup::{cokernel, image, in_column_span, smith_normal_form, AbMap, FgAbGroup};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MiddleBracket {
    iota: AbMap,
    pi: AbMap,
    /// User assertion that the middle subquotient is idempotent complete.
    idempotent_complete: Option<bool>,
}

impl MiddleBracket {
    /// Checks that the maps compose and that `pi ∘ iota = 0`.
    pub fn new(iota: AbMap, pi: AbMap, idempotent_complete: Option<bool>) -> Result<Self, Error> {
        if iota.codomain() != pi.domain() {
            return Err(Error::DimensionMismatch(
                "iota codomain and pi domain presentations differ".into(),
            ));
        }
        if !iota.then(&pi)?.is_zero() {
            return Err(Error::NotAComplex);
        }
        Ok(MiddleBracket {
            iota,
            pi,
            idempotent_complete,
        })
    }

    pub fn iota(&self) -> &AbMap {
        &self.iota
    }

    pub fn pi(&self) -> &AbMap {
        &self.pi
    }

    pub fn idempotent_complete(&self) -> Option<bool> {
        self.idempotent_complete
    }

    /// Verifies `im(iota) = ker(pi)` on lattices modulo the middle relations.
    /// The inclusion `⊆` holds by construction, so only `ker ⊆ im` is tested.
    pub fn check_exactness(&self) -> Result<(), Error> {
        let ker = self.pi.kernel_lattice();
        let spanned = self
            .iota
            .matrix()
            .hstack(self.iota.codomain().relations())?;
        let snf = smith_normal_form(&spanned);
        for j in 0..ker.cols() {
            let v = ker.col(j);
            if !in_column_span(&snf, &v) {
                return Err(Error::NotExact { witness: v });
            }
        }
        Ok(())
    }
}

/// `CH ≅ im(iota)`. With `verify_exactness`, also requires `im(iota) = ker(pi)`.
pub fn chow_from_bracket(b: &MiddleBracket, verify_exactness: bool) -> Result<FgAbGroup, Error> {
    if verify_exactness {
        b.check_exactness()?;
    }
    Ok(image(&b.iota))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryData {
    pub k1_boundary: AbMap,
}

/// `CH ≅ coker(∂ : K_1 → K_0)`.
pub fn chow_from_cokernel(d: &BoundaryData) -> FgAbGroup {
    cokernel(&d.k1_boundary)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurjectivityCheck {
    pub surjective: bool,
    /// `Some(agrees)` when an idempotent-completeness assertion was supplied.
    pub flag_agrees: Option<bool>,
}

impl SurjectivityCheck {
    pub fn warning(&self) -> Option<String> {
        match self.flag_agrees {
            Some(false) if self.surjective => Some(
                "pi is surjective although the middle term was declared not idempotent complete".into(),
            ),
            Some(false) => Some(
                "middle term declared idempotent complete but pi is not surjective".into(),
            ),
            _ => None,
        }
    }
}

/// Whether `pi` is onto, cross-checked against the idempotent-completeness
/// assertion. A non-complete middle term may still have surjective `pi`, so a
/// `false` flag only disagrees when `pi` happens to be onto.
pub fn check_split_surjective(b: &MiddleBracket) -> SurjectivityCheck {
    let surjective = b.pi.is_surjective();
    SurjectivityCheck {
        surjective,
        flag_agrees: b.idempotent_complete.map(|flag| flag == surjective),
    }
}

/// `a ⊕ c` for `0 → a → ? → c → 0` with `c` free.
pub fn split_short_exact(a: &FgAbGroup, c: &FgAbGroup) -> Result<FgAbGroup, Error> {
    if !c.is_free() {
        return Err(Error::QuotientNotFree);
    }
    Ok(a.direct_sum(c))
}

/// Witness coordinates rendered for messages.
pub fn format_witness(w: &[BigInt]) -> String {
    let parts: Vec<String> = w.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}
