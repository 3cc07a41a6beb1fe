use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{smith_normal_form, FgAbGroup, IntMatrix, SmithForm};
use crate::Error;

/// Abelian group given by generators and relations; each column of `relations`
/// is one relation among the generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    generators: usize,
    relations: IntMatrix,
}

impl Presentation {
    pub fn new(generators: usize, relations: IntMatrix) -> Result<Self, Error> {
        if relations.rows() != generators {
            return Err(Error::DimensionMismatch(format!(
                "relation matrix has {} rows but the presentation has {generators} generators",
                relations.rows()
            )));
        }
        Ok(Presentation {
            generators,
            relations,
        })
    }

    pub fn free(generators: usize) -> Self {
        Presentation {
            generators,
            relations: IntMatrix::zeros(generators, 0),
        }
    }

    /// Standard presentation of a normal-form group: one generator per summand.
    pub fn of_group(g: &FgAbGroup) -> Self {
        let n = g.rank() + g.torsion().len();
        let mut diag = vec![BigInt::zero(); g.rank()];
        diag.extend(g.torsion().iter().cloned());
        let mut rel = IntMatrix::zeros(n, n);
        for (i, d) in diag.into_iter().enumerate() {
            rel[(i, i)] = d;
        }
        Presentation {
            generators: n,
            relations: rel,
        }
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    /// The presented group in normal form.
    pub fn group(&self) -> FgAbGroup {
        group_of_relations(&self.relations)
    }

    /// Whether `x` (in generator coordinates) is zero in the presented group.
    pub fn is_zero_element(&self, x: &[BigInt]) -> bool {
        in_column_span(&smith_normal_form(&self.relations), x)
    }

    pub fn direct_sum(&self, other: &Presentation) -> Presentation {
        Presentation {
            generators: self.generators + other.generators,
            relations: self.relations.block_diag(&other.relations),
        }
    }
}

/// A homomorphism between presented groups, given on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbMap {
    domain: Presentation,
    codomain: Presentation,
    matrix: IntMatrix,
}

impl AbMap {
    /// Validates the shape and that every domain relation maps to zero.
    pub fn new(domain: Presentation, codomain: Presentation, matrix: IntMatrix) -> Result<Self, Error> {
        if matrix.rows() != codomain.generators || matrix.cols() != domain.generators {
            return Err(Error::DimensionMismatch(format!(
                "map matrix is {}x{} but codomain has {} and domain has {} generators",
                matrix.rows(),
                matrix.cols(),
                codomain.generators,
                domain.generators
            )));
        }
        let images = &matrix * &domain.relations;
        let snf = smith_normal_form(&codomain.relations);
        for j in 0..images.cols() {
            if !in_column_span(&snf, &images.col(j)) {
                return Err(Error::IllDefinedMap(format!(
                    "domain relation {j} is not sent into the codomain relations"
                )));
            }
        }
        Ok(AbMap {
            domain,
            codomain,
            matrix,
        })
    }

    /// Map between free groups.
    pub fn between_free(matrix: IntMatrix) -> Self {
        AbMap {
            domain: Presentation::free(matrix.cols()),
            codomain: Presentation::free(matrix.rows()),
            matrix,
        }
    }

    pub fn domain(&self) -> &Presentation {
        &self.domain
    }

    pub fn codomain(&self) -> &Presentation {
        &self.codomain
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &AbMap) -> Result<AbMap, Error> {
        if self.codomain != other.domain {
            return Err(Error::DimensionMismatch(
                "composition: codomain and domain presentations differ".into(),
            ));
        }
        Ok(AbMap {
            domain: self.domain.clone(),
            codomain: other.codomain.clone(),
            matrix: other.matrix.checked_mul(&self.matrix)?,
        })
    }

    /// Block-diagonal sum `f ⊕ g`.
    pub fn direct_sum(&self, other: &AbMap) -> AbMap {
        AbMap {
            domain: self.domain.direct_sum(&other.domain),
            codomain: self.codomain.direct_sum(&other.codomain),
            matrix: self.matrix.block_diag(&other.matrix),
        }
    }

    /// Whether the map is zero on the presented groups.
    pub fn is_zero(&self) -> bool {
        let snf = smith_normal_form(&self.codomain.relations);
        (0..self.matrix.cols()).all(|j| in_column_span(&snf, &self.matrix.col(j)))
    }

    pub fn is_surjective(&self) -> bool {
        cokernel(self).is_trivial()
    }

    /// Lattice `{x ∈ ℤ^domain : f(x) = 0 in the codomain}` as a basis (columns).
    /// Contains the domain relations.
    pub fn kernel_lattice(&self) -> IntMatrix {
        let n = self.domain.generators;
        let stacked = self
            .matrix
            .hstack(&self.codomain.relations)
            .expect("row counts agree by construction");
        let null = integer_kernel(&stacked);
        lattice_basis(&null.top_rows(n))
    }
}

/// `codomain / (im f + codomain relations)`.
pub fn cokernel(f: &AbMap) -> FgAbGroup {
    let stacked = f
        .matrix
        .hstack(&f.codomain.relations)
        .expect("row counts agree by construction");
    group_of_relations(&stacked)
}

/// Isomorphism type of `ker f`. Generators of the kernel, in domain generator
/// coordinates, are available from [`kernel_generators`].
pub fn kernel(f: &AbMap) -> FgAbGroup {
    let basis = f.kernel_lattice();
    let snf = smith_normal_form(&basis);
    let rels = &f.domain.relations;
    let mut coords = IntMatrix::zeros(basis.cols(), rels.cols());
    for j in 0..rels.cols() {
        let c = solve_in_basis(&snf, &rels.col(j)).expect("relations lie in the kernel lattice");
        for (i, x) in c.into_iter().enumerate() {
            coords[(i, j)] = x;
        }
    }
    group_of_relations(&coords)
}

/// Columns generating `ker f` inside the domain (domain generator coordinates).
pub fn kernel_generators(f: &AbMap) -> IntMatrix {
    f.kernel_lattice()
}

/// Isomorphism type of the image of the induced map on quotient groups.
/// By the first isomorphism theorem this is `ℤ^domain / kernel lattice`.
pub fn image(f: &AbMap) -> FgAbGroup {
    group_of_relations(&f.kernel_lattice())
}

/// `ℤ^rows / column span`.
pub(crate) fn group_of_relations(rel: &IntMatrix) -> FgAbGroup {
    let snf = smith_normal_form(rel);
    let diag = snf.diagonal();
    let free_extra = rel.rows() - diag.len();
    FgAbGroup::new(free_extra, diag)
}

/// Whether `x` lies in the column span of the matrix whose SNF is given.
pub(crate) fn in_column_span(snf: &SmithForm, x: &[BigInt]) -> bool {
    let y = snf.u.apply(x);
    let diag = snf.diagonal();
    y.iter().enumerate().all(|(i, yi)| match diag.get(i) {
        Some(d) if !d.is_zero() => yi.is_multiple_of(d),
        _ => yi.is_zero(),
    })
}

/// Solves `B c = x` for a basis matrix `B` (full column rank) given its SNF.
pub(crate) fn solve_in_basis(snf: &SmithForm, x: &[BigInt]) -> Option<Vec<BigInt>> {
    let y = snf.u.apply(x);
    let diag = snf.diagonal();
    let cols = snf.v.rows();
    let mut z = vec![BigInt::zero(); cols];
    for (i, yi) in y.iter().enumerate() {
        match diag.get(i) {
            Some(d) if !d.is_zero() => {
                let (q, r) = yi.div_rem(d);
                if !r.is_zero() {
                    return None;
                }
                z[i] = q;
            }
            _ => {
                if !yi.is_zero() {
                    return None;
                }
            }
        }
    }
    Some(snf.v.apply(&z))
}

/// Basis (columns) of the integer null space `{x : a x = 0}`.
pub(crate) fn integer_kernel(a: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(a);
    let r = snf.rank();
    snf.v.select_cols(r..a.cols())
}

/// Basis (columns) of the lattice spanned by the columns of `gens`.
pub(crate) fn lattice_basis(gens: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(gens);
    let diag = snf.diagonal();
    let r = snf.rank();
    let mut basis = snf.u_inv.select_cols(0..r);
    for (j, d) in diag.iter().take(r).enumerate() {
        for i in 0..basis.rows() {
            basis[(i, j)] *= d;
        }
        let leading_negative = (0..basis.rows())
            .map(|i| &basis[(i, j)])
            .find(|x| !x.is_zero())
            .is_some_and(|x| x.is_negative());
        if leading_negative {
            basis.negate_col(j);
        }
    }
    basis
}
