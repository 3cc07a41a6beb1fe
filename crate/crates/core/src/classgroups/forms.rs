use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;

use crate::abgroup::{finite_abelian_from_table, FgAbGroup};
use crate::Error;

/// Primitive positive definite binary quadratic form `a x² + b xy + c y²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl QuadForm {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        QuadForm { a, b, c }
    }

    pub fn discriminant(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    pub fn is_primitive(&self) -> bool {
        self.a.gcd(&self.b).gcd(&self.c) == 1
    }

    pub fn is_reduced(&self) -> bool {
        let (a, b, c) = (self.a, self.b, self.c);
        b.abs() <= a && a <= c && (b >= 0 || (b.abs() != a && a != c))
    }

    /// The identity class of discriminant `d`.
    pub fn principal(d: i64) -> Self {
        if d.rem_euclid(4) == 0 {
            QuadForm::new(1, 0, -d / 4)
        } else {
            QuadForm::new(1, 1, (1 - d) / 4)
        }
    }

    pub fn inverse(&self) -> Self {
        reduce(self.a as i128, -(self.b as i128), self.c as i128)
    }

    /// Composition of two forms of the same discriminant, reduced.
    pub fn compose(&self, other: &QuadForm) -> QuadForm {
        debug_assert_eq!(self.discriminant(), other.discriminant());
        let disc = self.discriminant() as i128;
        let (f1, f2) = if self.a > other.a { (other, self) } else { (self, other) };
        let (a1, b1) = (f1.a as i128, f1.b as i128);
        let (a2, b2, c2) = (f2.a as i128, f2.b as i128, f2.c as i128);
        let s = (b1 + b2) / 2;
        let n = b2 - s;
        let (d, y1) = if a2 % a1 == 0 {
            (a1, 0)
        } else {
            let e = a2.extended_gcd(&a1);
            (e.gcd, e.x)
        };
        let (d1, x2, y2) = if s % d == 0 {
            (d, 0, -1)
        } else {
            let e = s.extended_gcd(&d);
            (e.gcd, e.x, -e.y)
        };
        let v1 = a1 / d1;
        let v2 = a2 / d1;
        let r = (y1 * y2 * n - x2 * c2).rem_euclid(v1);
        let b3 = b2 + 2 * v2 * r;
        let a3 = v1 * v2;
        let num = b3 * b3 - disc;
        debug_assert_eq!(num % (4 * a3), 0);
        reduce(a3, b3, num / (4 * a3))
    }
}

impl fmt::Display for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// Reduction of a positive definite form.
fn reduce(mut a: i128, mut b: i128, mut c: i128) -> QuadForm {
    let disc = b * b - 4 * a * c;
    let normalize = |a: i128, b: i128| -> (i128, i128) {
        let r = Integer::div_floor(&(a - b), &(2 * a));
        let nb = b + 2 * r * a;
        (nb, (nb * nb - disc) / (4 * a))
    };
    (b, c) = normalize(a, b);
    while a > c {
        (a, b) = (c, -b);
        (b, c) = normalize(a, b);
    }
    if a == c && b < 0 {
        b = -b;
    }
    let narrow = |x: i128| i64::try_from(x).expect("reduced coefficients fit in i64");
    QuadForm::new(narrow(a), narrow(b), narrow(c))
}

fn is_squarefree(mut n: u64) -> bool {
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p * p) {
            return false;
        }
        if n.is_multiple_of(p) {
            n /= p;
        }
        p += 1;
    }
    true
}

/// Rejects anything but a negative fundamental discriminant.
pub fn validate_discriminant(d: i64) -> Result<(), Error> {
    let fail = |reason| Err(Error::InvalidDiscriminant { disc: d, reason });
    if d >= 0 {
        return fail("must be negative");
    }
    if d < -(1i64 << 40) {
        return fail("too large for the reduced-form enumeration");
    }
    match d.rem_euclid(4) {
        1 if is_squarefree(d.unsigned_abs()) => Ok(()),
        0 => {
            let m = d / 4;
            if matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m.unsigned_abs()) {
                Ok(())
            } else {
                fail("not fundamental")
            }
        }
        1 => fail("not fundamental"),
        _ => fail("must be congruent to 0 or 1 mod 4"),
    }
}

/// All reduced primitive forms of discriminant `d`, ordered by `a` then by
/// decreasing `b`. The length is the class number `h(d)`.
pub fn reduced_forms(d: i64) -> Result<Vec<QuadForm>, Error> {
    validate_discriminant(d)?;
    let abs = d.unsigned_abs() as i64;
    let mut out = Vec::new();
    let mut a = 1i64;
    while 3 * a * a <= abs {
        for b in (-a..=a).rev() {
            let num = b * b - d;
            if num % (4 * a) != 0 {
                continue;
            }
            let f = QuadForm::new(a, b, num / (4 * a));
            if f.is_reduced() && f.is_primitive() {
                out.push(f);
            }
        }
        a += 1;
    }
    Ok(out)
}

/// Reduced forms of one discriminant with their composition table.
#[derive(Clone, Debug)]
pub struct FormClassTable {
    pub discriminant: i64,
    pub forms: Vec<QuadForm>,
    /// `op[i][j]` is the index of `forms[i] ∘ forms[j]`.
    pub op: Vec<Vec<usize>>,
    pub identity: usize,
}

impl FormClassTable {
    pub fn new(d: i64) -> Result<Self, Error> {
        let forms = reduced_forms(d)?;
        let index: HashMap<QuadForm, usize> = forms.iter().enumerate().map(|(i, f)| (*f, i)).collect();
        let op = forms
            .iter()
            .map(|f| {
                forms
                    .iter()
                    .map(|g| index[&f.compose(g)])
                    .collect()
            })
            .collect();
        let identity = index[&QuadForm::principal(d)];
        Ok(FormClassTable {
            discriminant: d,
            forms,
            op,
            identity,
        })
    }

    pub fn class_number(&self) -> usize {
        self.forms.len()
    }

    /// Exhaustive check of associativity, commutativity, identity and the
    /// inverse `(a, -b, c)`.
    pub fn check_group_axioms(&self) -> Result<(), String> {
        let n = self.forms.len();
        for x in 0..n {
            if self.op[self.identity][x] != x || self.op[x][self.identity] != x {
                return Err(format!("principal form is not neutral for {}", self.forms[x]));
            }
            let inv = self.forms[x].inverse();
            let Some(j) = self.forms.iter().position(|f| *f == inv) else {
                return Err(format!("inverse of {} is not among the reduced forms", self.forms[x]));
            };
            if self.op[x][j] != self.identity {
                return Err(format!("{} composed with its inverse is not principal", self.forms[x]));
            }
            for y in 0..n {
                if self.op[x][y] != self.op[y][x] {
                    return Err(format!("composition of {} and {} is not commutative", self.forms[x], self.forms[y]));
                }
                for z in 0..n {
                    if self.op[self.op[x][y]][z] != self.op[x][self.op[y][z]] {
                        return Err(format!(
                            "composition is not associative on {}, {}, {}",
                            self.forms[x], self.forms[y], self.forms[z]
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> FgAbGroup {
        finite_abelian_from_table(&self.op, self.identity)
    }
}

/// Class group of the imaginary quadratic field of discriminant `d`.
pub fn form_class_group(d: i64) -> Result<FgAbGroup, Error> {
    Ok(FormClassTable::new(d)?.group())
}
