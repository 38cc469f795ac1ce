use std::fmt;

use thiserror::Error;

/// Which group axiom a Cayley table broke.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    Closure,
    Identity,
    Inverse,
    Associativity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Closure => "closure",
            Axiom::Identity => "identity",
            Axiom::Inverse => "inverse",
            Axiom::Associativity => "associativity",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is not square or does not match the label count: {0}")]
    Shape(String),
    #[error("{axiom} axiom fails at ({}, {}, {})", witness[0], witness[1], witness[2])]
    AxiomViolation { axiom: Axiom, witness: [usize; 3] },
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("permutation image {image} out of range for degree {degree}")]
    Degree { degree: usize, image: usize },
    #[error("not a permutation: {0}")]
    NotBijection(String),
    #[error("unknown group name {0:?}")]
    UnknownName(String),
    #[error("group order {order} exceeds the limit of {limit}")]
    OrderTooLarge { order: usize, limit: usize },
    #[error("sets belong to different groups")]
    ParentMismatch,
    #[error("set is not a subgroup")]
    NotSubgroup,
    #[error("subgroup is not normal: conjugating by {witness} leaves it")]
    NotNormal { witness: String },
    #[error("subset does not contain the normal subgroup")]
    MissingKernel,
    #[error("quotient subset does not contain the identity coset")]
    MissingIdentityCoset,
    #[error("map is not a homomorphism: f({x}*{y}) != f({x})*f({y})")]
    NotHomomorphism { x: String, y: String },
    #[error("map is not total or has out-of-range images")]
    MapShape,
    #[error("first normal subgroup is not contained in the second")]
    NotNested,
    #[error("H is not a subgroup")]
    NotSubgroupH,
    #[error("M is not contained in H")]
    PreconditionM,
    #[error("property {clause} failed: {detail}")]
    PropertyFailed { clause: String, detail: String },
    #[error("instance does not match the hypothesis shape of {0}")]
    ShapeMismatch(String),
    #[error("unknown statement {0:?}")]
    UnknownStatement(String),
    #[error("unknown property {0:?}")]
    UnknownProperty(String),
    #[error("unknown element label {0:?}")]
    UnknownLabel(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
