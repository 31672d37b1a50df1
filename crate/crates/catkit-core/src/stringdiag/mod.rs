//! Progressive plane string diagrams evaluated as layered matrix composites.
//!
//! A diagram is a list of layers; each layer is a horizontal row of cells
//! (identity wires, named boxes, caps and cups). Layers are listed in
//! application order: the first layer acts on the diagram's domain. The value
//! of a layer is the Kronecker product of its cell values and the value of
//! the diagram is the composite of the layer values. All monoidal structure
//! is strict, so associators and unitors never materialize.
//!
//! Duality uses the standard basis: the cap on `A` is
//! `e : A (x) A* -> I, v (x) phi -> phi(v)` and the cup is
//! `d : I -> A* (x) A, 1 -> sum_i e*_i (x) e_i`.

use crate::exact_algebra::{LaurentPoly, MatError, SparseMat};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagError {
    #[error("object {0} has no dimension in the environment")]
    UnknownObject(String),
    #[error("box {0} is not bound in the environment")]
    UnboundBox(String),
    #[error("box {name} should be {expected_rows}x{expected_cols}, environment value is {rows}x{cols}")]
    BadBoxShape {
        name: String,
        expected_rows: usize,
        expected_cols: usize,
        rows: usize,
        cols: usize,
    },
    #[error("layer {layer} inputs {found:?} do not match previous outputs {expected:?}")]
    LayerMismatch { layer: usize, expected: Vec<String>, found: Vec<String> },
    #[error("matrix error: {0}")]
    Mat(#[from] MatError),
    #[error("trace of a non-square matrix ({nrows}x{ncols})")]
    TraceNotSquare { nrows: usize, ncols: usize },
}

/// An object label, possibly the chosen right dual. Duals share the
/// dimension of the underlying object.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Obj {
    name: String,
    dual: bool,
}

impl Obj {
    pub fn plain(name: impl Into<String>) -> Self {
        Obj { name: name.into(), dual: false }
    }

    pub fn dual_of(name: impl Into<String>) -> Self {
        Obj { name: name.into(), dual: true }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_dual(&self) -> bool {
        self.dual
    }
}

impl fmt::Display for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dual {
            write!(f, "{}*", self.name)
        } else {
            write!(f, "{}", self.name)
        }
    }
}

/// One cell of a layer.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Cell {
    /// An identity wire on the labelled object.
    Id(Obj),
    /// A named box with explicit input and output labels.
    Box { name: String, inputs: Vec<Obj>, outputs: Vec<Obj> },
    /// The counit `A (x) A* -> I`.
    Cap(Obj),
    /// The unit `I -> A* (x) A`.
    Cup(Obj),
}

impl Cell {
    pub fn boxed(
        name: impl Into<String>,
        inputs: impl IntoIterator<Item = Obj>,
        outputs: impl IntoIterator<Item = Obj>,
    ) -> Self {
        Cell::Box {
            name: name.into(),
            inputs: inputs.into_iter().collect(),
            outputs: outputs.into_iter().collect(),
        }
    }

    pub fn inputs(&self) -> Vec<Obj> {
        match self {
            Cell::Id(a) => vec![a.clone()],
            Cell::Box { inputs, .. } => inputs.clone(),
            Cell::Cap(a) => vec![a.clone(), Obj { name: a.name.clone(), dual: !a.dual }],
            Cell::Cup(_) => vec![],
        }
    }

    pub fn outputs(&self) -> Vec<Obj> {
        match self {
            Cell::Id(a) => vec![a.clone()],
            Cell::Box { outputs, .. } => outputs.clone(),
            Cell::Cap(_) => vec![],
            Cell::Cup(a) => vec![Obj { name: a.name.clone(), dual: !a.dual }, a.clone()],
        }
    }
}

/// A pre-layered progressive diagram.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Diagram {
    pub layers: Vec<Vec<Cell>>,
}

impl Diagram {
    pub fn new(layers: Vec<Vec<Cell>>) -> Self {
        Diagram { layers }
    }
}

/// Object dimensions and box values.
#[derive(Clone, Debug, Default)]
pub struct Environment {
    dims: BTreeMap<String, usize>,
    boxes: BTreeMap<String, SparseMat>,
}

impl Environment {
    pub fn new() -> Self {
        Environment::default()
    }

    pub fn with_dim(mut self, name: impl Into<String>, dim: usize) -> Self {
        assert!(dim >= 1, "object dimensions are positive");
        self.dims.insert(name.into(), dim);
        self
    }

    pub fn with_box(mut self, name: impl Into<String>, value: SparseMat) -> Self {
        self.boxes.insert(name.into(), value);
        self
    }

    pub fn dim(&self, obj: &Obj) -> Result<usize, DiagError> {
        self.dims
            .get(obj.name())
            .copied()
            .ok_or_else(|| DiagError::UnknownObject(obj.to_string()))
    }

    fn dims_product(&self, objs: &[Obj]) -> Result<usize, DiagError> {
        let mut p = 1usize;
        for o in objs {
            p *= self.dim(o)?;
        }
        Ok(p)
    }

    fn cell_value(&self, cell: &Cell) -> Result<SparseMat, DiagError> {
        match cell {
            Cell::Id(a) => Ok(SparseMat::identity(self.dim(a)?)),
            Cell::Box { name, inputs, outputs } => {
                let m = self
                    .boxes
                    .get(name)
                    .ok_or_else(|| DiagError::UnboundBox(name.clone()))?;
                let rows = self.dims_product(outputs)?;
                let cols = self.dims_product(inputs)?;
                if m.nrows() != rows || m.ncols() != cols {
                    return Err(DiagError::BadBoxShape {
                        name: name.clone(),
                        expected_rows: rows,
                        expected_cols: cols,
                        rows: m.nrows(),
                        cols: m.ncols(),
                    });
                }
                Ok(m.clone())
            }
            Cell::Cap(a) => {
                let n = self.dim(a)?;
                Ok(SparseMat::from_entries(
                    1,
                    n * n,
                    (0..n).map(|i| (0, i * n + i, LaurentPoly::one())),
                ))
            }
            Cell::Cup(a) => {
                let n = self.dim(a)?;
                Ok(SparseMat::from_entries(
                    n * n,
                    1,
                    (0..n).map(|i| (i * n + i, 0, LaurentPoly::one())),
                ))
            }
        }
    }
}

fn layer_interface(layer: &[Cell], outputs: bool) -> Vec<Obj> {
    layer
        .iter()
        .flat_map(|c| if outputs { c.outputs() } else { c.inputs() })
        .collect()
}

/// Evaluate a diagram against an environment. Layer interfaces must match
/// label-for-label and every box must be bound with the right shape.
pub fn eval_diagram(diagram: &Diagram, env: &Environment) -> Result<SparseMat, DiagError> {
    let mut acc: Option<SparseMat> = None;
    let mut prev_out: Option<Vec<Obj>> = None;
    for (k, layer) in diagram.layers.iter().enumerate() {
        let ins = layer_interface(layer, false);
        if let Some(prev) = &prev_out {
            if prev != &ins {
                return Err(DiagError::LayerMismatch {
                    layer: k,
                    expected: prev.iter().map(|o| o.to_string()).collect(),
                    found: ins.iter().map(|o| o.to_string()).collect(),
                });
            }
        }
        let mut value = SparseMat::identity(1);
        for cell in layer {
            value = value.kron(&env.cell_value(cell)?);
        }
        acc = Some(match acc {
            None => value,
            Some(prev) => value.compose(&prev)?,
        });
        prev_out = Some(layer_interface(layer, true));
    }
    Ok(acc.unwrap_or_else(|| SparseMat::identity(1)))
}

/// Both snake identities `(e (x) 1)(1 (x) d) = 1` and
/// `(1 (x) e)(d (x) 1) = 1` at the given dimension, by direct matrix
/// computation from the standard-basis cap and cup.
pub fn check_snake(dim: usize) -> bool {
    let env = Environment::new().with_dim("A", dim);
    let a = Obj::plain("A");
    let a_star = Obj::dual_of("A");
    let left = Diagram::new(vec![
        vec![Cell::Id(a.clone()), Cell::Cup(a.clone())],
        vec![Cell::Cap(a.clone()), Cell::Id(a.clone())],
    ]);
    let right = Diagram::new(vec![
        vec![Cell::Cup(a.clone()), Cell::Id(a_star.clone())],
        vec![Cell::Id(a_star), Cell::Cap(a)],
    ]);
    let id_a = SparseMat::identity(dim);
    eval_diagram(&left, &env).map_or(false, |m| m == id_a)
        && eval_diagram(&right, &env).map_or(false, |m| m == id_a)
}

/// The categorical trace `I -> A* (x) A -> A* (x) A -> A (x) A* -> I`
/// (cup, then `1 (x) f`, then the flip, then the cap). Agrees with the
/// matrix trace.
pub fn categorical_trace(f: &SparseMat) -> Result<LaurentPoly, DiagError> {
    if !f.is_square() {
        return Err(DiagError::TraceNotSquare { nrows: f.nrows(), ncols: f.ncols() });
    }
    let n = f.nrows();
    if n == 0 {
        return Ok(LaurentPoly::zero());
    }
    let env = Environment::new().with_dim("A", n).with_box("f", f.clone());
    let a = Obj::plain("A");
    let fbox = Cell::boxed("f", [a.clone()], [a.clone()]);
    let cup = eval_diagram(&Diagram::new(vec![vec![Cell::Cup(a.clone())]]), &env)?;
    let middle = SparseMat::identity(n).kron(&env.cell_value(&fbox)?);
    let flip = SparseMat::flip(n, n); // A* (x) A -> A (x) A*
    let cap = eval_diagram(&Diagram::new(vec![vec![Cell::Cap(a)]]), &env)?;
    let composite = cap.compose(&flip)?.compose(&middle)?.compose(&cup)?;
    Ok(composite.get(0, 0))
}
