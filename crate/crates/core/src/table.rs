//! The catalogue of smallest known `(r|χ)`-graphs for `2 <= r <= 10`,
//! `2 <= χ <= 6`, and its verification.
//!
//! Every named graph is built and checked for order, regularity and exact
//! chromatic number. Where the enumeration budget allows, the cell's order is
//! also certified minimal by exhaustive search.

use serde::Serialize;

use crate::bounds::lower_bound;
use crate::canon::is_isomorphic;
use crate::census::Census;
use crate::chromatic::chromatic_number;
use crate::constructions::{CycleUnionSpec, Family};
use crate::error::Result;
use crate::graph6::{decode_graph6, encode_graph6};
use crate::search::{extremal_search, Budget, OrderCount};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableCell {
    pub r: usize,
    pub chi: usize,
    /// Empty for the one cell whose value was not known.
    pub graphs: Vec<Family>,
}

impl TableCell {
    pub fn is_open(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn order(&self) -> Option<usize> {
        self.graphs.first().map(|f| f.claim().order)
    }
}

fn cu(lengths: &[usize]) -> Family {
    Family::CycleUnionComplement(
        CycleUnionSpec::new(lengths.to_vec()).expect("valid cycle lengths"),
    )
}

/// All cells of the catalogue, row by row. Cells with `χ > r + 1` are
/// impossible and absent.
pub fn table_cells() -> Vec<TableCell> {
    use Family::*;
    let t = |n, k| Turan { n, k };
    let ah = |n| Antihole { n };
    let cell = |r, chi, graphs| TableCell { r, chi, graphs };
    vec![
        cell(2, 2, vec![t(4, 2)]),
        cell(2, 3, vec![t(3, 3)]),
        cell(3, 2, vec![t(6, 2)]),
        cell(3, 3, vec![ah(6)]),
        cell(3, 4, vec![t(4, 4)]),
        cell(4, 2, vec![t(8, 2)]),
        cell(4, 3, vec![t(6, 3)]),
        cell(4, 4, vec![ah(7)]),
        cell(4, 5, vec![t(5, 5)]),
        cell(5, 2, vec![t(10, 2)]),
        cell(5, 3, vec![GAct { a: 5, c: 2, t: 2 }]),
        cell(5, 4, vec![ah(8), cu(&[4, 4]), cu(&[5, 3])]),
        cell(5, 5, vec![Prism { k: 5 }]),
        cell(5, 6, vec![t(6, 6)]),
        cell(6, 2, vec![t(12, 2)]),
        cell(6, 3, vec![t(9, 3)]),
        cell(6, 4, vec![t(8, 4)]),
        cell(6, 5, vec![ah(9), cu(&[5, 4])]),
        cell(6, 6, vec![]),
        cell(7, 2, vec![t(14, 2)]),
        cell(7, 3, vec![TStar { n: 12, chi: 3 }]),
        cell(7, 4, vec![TStar { n: 10, chi: 4 }]),
        cell(7, 5, vec![ah(10), cu(&[4, 6]), cu(&[7, 3])]),
        cell(7, 6, vec![cu(&[5, 5])]),
        cell(8, 2, vec![t(16, 2)]),
        cell(8, 3, vec![t(12, 3)]),
        cell(8, 4, vec![GAct { a: 4, c: 2, t: 3 }]),
        cell(8, 5, vec![t(10, 5)]),
        cell(8, 6, vec![ah(11), cu(&[4, 7]), cu(&[5, 6])]),
        cell(9, 2, vec![t(18, 2)]),
        cell(9, 3, vec![TDoubleStar]),
        cell(9, 4, vec![t(12, 4)]),
        cell(9, 5, vec![TStar { n: 12, chi: 5 }]),
        cell(
            9,
            6,
            vec![
                ah(12),
                cu(&[6, 6]),
                cu(&[4, 4, 4]),
                cu(&[3, 4, 5]),
                cu(&[3, 9]),
            ],
        ),
        cell(10, 2, vec![t(20, 2)]),
        cell(10, 3, vec![t(15, 3)]),
        cell(10, 4, vec![TStar { n: 14, chi: 4 }]),
        cell(10, 5, vec![TStar { n: 13, chi: 5 }]),
        cell(10, 6, vec![t(12, 6)]),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphCheck {
    pub name: String,
    pub graph6: String,
    pub order: usize,
    pub regularity: Option<usize>,
    pub chi: usize,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Minimality {
    /// Every smaller order with `n·r` even was enumerated without a witness.
    Certified {
        exhausted: Vec<OrderCount>,
        /// All witnesses at the cell's order, when that order was enumerated too.
        witnesses: Option<usize>,
    },
    /// The order equals the closed-form lower bound.
    LowerBound,
    NotChecked {
        reason: String,
    },
    Failed {
        reason: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CellStatus {
    Verified,
    Failed,
    Open,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CellReport {
    pub r: usize,
    pub chi: usize,
    pub status: CellStatus,
    pub order: Option<usize>,
    pub graphs: Vec<GraphCheck>,
    pub minimality: Option<Minimality>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableReport {
    pub cells: Vec<CellReport>,
    pub verified: usize,
    pub failed: usize,
    pub open: usize,
}

impl TableReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Copy, Debug)]
pub struct TableOptions {
    /// Run exhaustive minimality checks at all.
    pub minimality: bool,
    pub budget: Budget,
}

impl Default for TableOptions {
    fn default() -> Self {
        TableOptions {
            minimality: true,
            budget: Budget::default(),
        }
    }
}

fn check_graph(f: &Family, r: usize, chi: usize, order: usize) -> GraphCheck {
    let name = f.to_string();
    let Ok(g) = f.build() else {
        return GraphCheck {
            name,
            graph6: String::new(),
            order: 0,
            regularity: None,
            chi: 0,
            passed: false,
        };
    };
    let graph6 = encode_graph6(&g);
    let round_trip = decode_graph6(&graph6).is_ok_and(|h| h == g);
    let regularity = g.is_regular();
    let got = chromatic_number(&g).chi;
    GraphCheck {
        name,
        graph6,
        order: g.order(),
        regularity,
        chi: got,
        passed: round_trip && g.order() == order && regularity == Some(r) && got == chi,
    }
}

fn minimality(
    cell: &TableCell,
    order: usize,
    budget: Budget,
    census: &mut Option<&mut Census>,
) -> Result<Minimality> {
    let (r, chi) = (cell.r, cell.chi);
    let lower = lower_bound(r, chi)?;
    if order < lower {
        return Ok(Minimality::Failed {
            reason: format!("order {order} is below the lower bound {lower}"),
        });
    }
    let orders: Vec<usize> = (lower..=order).filter(|n| n * r % 2 == 0).collect();
    let below_in_budget = orders
        .iter()
        .filter(|&&n| n < order)
        .all(|&n| budget.allows(n, r));
    let top_in_budget = budget.allows(order, r);
    if !below_in_budget {
        return Ok(if order == lower {
            Minimality::LowerBound
        } else {
            Minimality::NotChecked {
                reason: "minimality not machine-checked, construction verified only".into(),
            }
        });
    }
    if !top_in_budget && order == lower {
        return Ok(Minimality::LowerBound);
    }
    let max = if top_in_budget { order } else { order - 1 };
    if max < lower {
        return Ok(Minimality::LowerBound);
    }
    let cert = extremal_search(r, chi, max, budget, census.as_deref_mut())?;
    match cert.minimal_order {
        Some(n) if n < order => Ok(Minimality::Failed {
            reason: format!("found a witness of order {n}"),
        }),
        Some(_) => {
            let witnesses: Vec<_> = cert
                .witnesses
                .iter()
                .map(|w| decode_graph6(w))
                .collect::<Result<_>>()?;
            for f in &cell.graphs {
                let g = f.build()?;
                if !witnesses.iter().any(|w| is_isomorphic(w, &g)) {
                    return Ok(Minimality::Failed {
                        reason: format!("{f} is missing from the enumerated witnesses"),
                    });
                }
            }
            Ok(Minimality::Certified {
                exhausted: cert.exhausted,
                witnesses: Some(cert.witnesses.len()),
            })
        }
        None => Ok(Minimality::Certified {
            exhausted: cert.exhausted,
            witnesses: None,
        }),
    }
}

/// Verifies every cell. Failures are recorded in the report; errors are
/// returned only for census I/O problems.
pub fn verify_table(options: TableOptions, mut census: Option<&mut Census>) -> Result<TableReport> {
    let mut cells = Vec::new();
    for cell in table_cells() {
        let Some(order) = cell.order() else {
            cells.push(CellReport {
                r: cell.r,
                chi: cell.chi,
                status: CellStatus::Open,
                order: None,
                graphs: Vec::new(),
                minimality: None,
            });
            continue;
        };
        let graphs: Vec<GraphCheck> = cell
            .graphs
            .iter()
            .map(|f| check_graph(f, cell.r, cell.chi, order))
            .collect();
        let minimality = if options.minimality {
            Some(minimality(&cell, order, options.budget, &mut census)?)
        } else {
            None
        };
        let ok = graphs.iter().all(|g| g.passed)
            && !matches!(minimality, Some(Minimality::Failed { .. }));
        cells.push(CellReport {
            r: cell.r,
            chi: cell.chi,
            status: if ok {
                CellStatus::Verified
            } else {
                CellStatus::Failed
            },
            order: Some(order),
            graphs,
            minimality,
        });
    }
    let count = |s| cells.iter().filter(|c| c.status == s).count();
    Ok(TableReport {
        verified: count(CellStatus::Verified),
        failed: count(CellStatus::Failed),
        open: count(CellStatus::Open),
        cells,
    })
}
