//! Registry of the structure results a computation may invoke, and a small
//! wrapper carrying a value together with the rules that produced it.

use std::fmt;

/// Every structure result or algorithm a computation can cite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    SmithNormalForm,
    LocalizationImage,
    LocalizationCokernel,
    SplitFreeQuotient,
    SurjectivityIdempotentComplete,
    TopCycleGroup,
    VanishingAboveDimension,
    CycleGroupSimples,
    DvrType,
    ChainLength,
    HereditaryCurveChow,
    SplitCurveChow,
    AzumayaCurveChow,
    DedekindHereditaryChow,
    HereditaryK0,
    SplitMaximalK0,
    MoritaClassGroup,
    QuadraticForms,
    CyclotomicTable,
    GroupRingTopChow,
    CyclicSubgroupCount,
    CyclotomicBaseSplitting,
    GroupRingDegreeZero,
    CyclicPrimeClassGroup,
    VanishingClassification,
    MaximalGroupRing,
    Devissage,
    RadicalScan,
}

impl Rule {
    pub const ALL: [Rule; 28] = [
        Rule::SmithNormalForm,
        Rule::LocalizationImage,
        Rule::LocalizationCokernel,
        Rule::SplitFreeQuotient,
        Rule::SurjectivityIdempotentComplete,
        Rule::TopCycleGroup,
        Rule::VanishingAboveDimension,
        Rule::CycleGroupSimples,
        Rule::DvrType,
        Rule::ChainLength,
        Rule::HereditaryCurveChow,
        Rule::SplitCurveChow,
        Rule::AzumayaCurveChow,
        Rule::DedekindHereditaryChow,
        Rule::HereditaryK0,
        Rule::SplitMaximalK0,
        Rule::MoritaClassGroup,
        Rule::QuadraticForms,
        Rule::CyclotomicTable,
        Rule::GroupRingTopChow,
        Rule::CyclicSubgroupCount,
        Rule::CyclotomicBaseSplitting,
        Rule::GroupRingDegreeZero,
        Rule::CyclicPrimeClassGroup,
        Rule::VanishingClassification,
        Rule::MaximalGroupRing,
        Rule::Devissage,
        Rule::RadicalScan,
    ];

    /// Stable identifier used in reports.
    pub fn id(self) -> &'static str {
        match self {
            Rule::SmithNormalForm => "smith-normal-form",
            Rule::LocalizationImage => "localization-image",
            Rule::LocalizationCokernel => "localization-cokernel",
            Rule::SplitFreeQuotient => "split-free-quotient",
            Rule::SurjectivityIdempotentComplete => "surjectivity-idempotent-complete",
            Rule::TopCycleGroup => "top-cycle-group",
            Rule::VanishingAboveDimension => "vanishing-above-dimension",
            Rule::CycleGroupSimples => "cycle-group-simples",
            Rule::DvrType => "dvr-type",
            Rule::ChainLength => "chain-length",
            Rule::HereditaryCurveChow => "hereditary-curve-chow",
            Rule::SplitCurveChow => "split-curve-chow",
            Rule::AzumayaCurveChow => "azumaya-curve-chow",
            Rule::DedekindHereditaryChow => "dedekind-hereditary-chow",
            Rule::HereditaryK0 => "hereditary-k0",
            Rule::SplitMaximalK0 => "split-maximal-k0",
            Rule::MoritaClassGroup => "morita-class-group",
            Rule::QuadraticForms => "quadratic-forms",
            Rule::CyclotomicTable => "cyclotomic-table",
            Rule::GroupRingTopChow => "group-ring-top-chow",
            Rule::CyclicSubgroupCount => "cyclic-subgroup-count",
            Rule::CyclotomicBaseSplitting => "cyclotomic-base-splitting",
            Rule::GroupRingDegreeZero => "group-ring-degree-zero",
            Rule::CyclicPrimeClassGroup => "cyclic-prime-class-group",
            Rule::VanishingClassification => "vanishing-classification",
            Rule::MaximalGroupRing => "maximal-group-ring",
            Rule::Devissage => "devissage",
            Rule::RadicalScan => "radical-scan",
        }
    }

    /// Human-readable statement of the result.
    pub fn citation(self) -> &'static str {
        match self {
            Rule::SmithNormalForm => "quotients of Z^n computed from the Smith normal form of the relation matrix",
            Rule::LocalizationImage => "CH_p embeds into K_0 of the middle subquotient; CH_p = im(iota) = ker(pi) in Z_p -> K_0 -> Z_(p+1)",
            Rule::LocalizationCokernel => "CH is the cokernel of the K_1 boundary in the long exact localization sequence",
            Rule::SplitFreeQuotient => "a short exact sequence with free quotient splits",
            Rule::SurjectivityIdempotentComplete => "pi : K_0(middle) -> Z_(p+1) is surjective when the middle subquotient is idempotent complete",
            Rule::TopCycleGroup => "top-dimensional cycle and Chow group of an order: one simple module at the generic point, Z",
            Rule::VanishingAboveDimension => "cycle and Chow groups vanish above the dimension of the support",
            Rule::CycleGroupSimples => "Z_0 is free on the isomorphism classes of simple modules supported at closed points",
            Rule::DvrType => "over a complete DVR, Z_0 of a hereditary order of type r is Z^r",
            Rule::ChainLength => "rho = sum over closed points of (type - 1), independent of the terminal maximal order",
            Rule::HereditaryCurveChow => "hereditary order on a curve: CH_0 = Cl(maximal order) + Z^rho, CH_1 = Z",
            Rule::SplitCurveChow => "split generic fibre (e.g. algebraically closed base field): CH_0 = Pic(C) + Z^rho",
            Rule::AzumayaCurveChow => "unramified generic fibre of degree n: CH_0 agrees with Pic(C) + Z^rho after tensoring with Z[1/n]",
            Rule::DedekindHereditaryChow => "hereditary order over a Dedekind domain: CH_0 = reduced K_0 = Cl(maximal order) + Z^rho",
            Rule::HereditaryK0 => "K_0 of a hereditary order = K_0(maximal order) + Z^rho",
            Rule::SplitMaximalK0 => "split maximal order: K_0 = K_0(O_C) = Pic(C) + Z by Morita theory",
            Rule::MoritaClassGroup => "class groups are Morita invariant: Cl(M_n(R)) = Cl(R)",
            Rule::QuadraticForms => "class group of an imaginary quadratic field from reduced binary quadratic forms under composition",
            Rule::CyclotomicTable => "class group of Z[zeta_p]: trivial for 3 <= p <= 19, Z/3 for p = 23",
            Rule::GroupRingTopChow => "CH_1 of an integral group ring RG is Z^t, t = number of Artin-Wedderburn factors of KG",
            Rule::CyclicSubgroupCount => "over Q the Artin-Wedderburn factors of QG correspond to conjugacy classes of cyclic subgroups",
            Rule::CyclotomicBaseSplitting => "Q(zeta_p)Cyc_p splits as a product of p copies of Q(zeta_p)",
            Rule::GroupRingDegreeZero => "CH_0 of an integral group ring RG = reduced K_0(RG) = Cl(RG)",
            Rule::CyclicPrimeClassGroup => "for G cyclic of prime order p: Cl(Z Cyc_p) = Cl(Z[zeta_p])",
            Rule::VanishingClassification => "for finite abelian G, Cl(ZG) = 0 exactly for cyclic G of order <= 11, 13, 14, 17, 19 and the Klein four group",
            Rule::MaximalGroupRing => "RG is maximal (equivalently hereditary) iff |G| is a unit in R",
            Rule::Devissage => "K_0 of finite-length modules = K_0 of the semisimple quotient = Z^(number of simples)",
            Rule::RadicalScan => "Jacobson radical by exhaustive quasi-regularity; simples counted as Frobenius-fixed dimension of the centre of A/J",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.id(), self.citation())
    }
}

/// A computed value with the rules applied, in order, and any warnings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derived<T> {
    pub value: T,
    pub trace: Vec<Rule>,
    pub warnings: Vec<String>,
}

impl<T> Derived<T> {
    pub fn new(value: T, trace: Vec<Rule>) -> Self {
        Derived {
            value,
            trace,
            warnings: Vec::new(),
        }
    }

    pub fn warn(mut self, w: impl Into<String>) -> Self {
        self.warnings.push(w.into());
        self
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Derived<U> {
        Derived {
            value: f(self.value),
            trace: self.trace,
            warnings: self.warnings,
        }
    }
}
