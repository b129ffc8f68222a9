//! `--filter` expressions for survey reports.

use anyhow::{anyhow, bail, Result};
use twistspec_core::spectra::Flags;
use twistspec_core::SpectrumReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Op {
    Eq,
    Ne,
    Le,
    Ge,
    Lt,
    Gt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Condition {
    Flag {
        name: String,
        value: bool,
        negate: bool,
    },
    Number {
        field: String,
        op: Op,
        value: usize,
    },
    Name {
        value: String,
        negate: bool,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Filter {
    conditions: Vec<Condition>,
    source: Vec<String>,
}

impl Filter {
    pub fn parse(spec: &str) -> Result<Filter> {
        let mut filter = Filter::default();
        for term in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            filter.conditions.push(parse_term(term)?);
            filter.source.push(term.to_string());
        }
        Ok(filter)
    }

    pub fn terms(&self) -> &[String] {
        &self.source
    }

    pub fn matches(&self, r: &SpectrumReport) -> bool {
        self.conditions.iter().all(|c| match c {
            Condition::Flag {
                name,
                value,
                negate,
            } => match r.flags.get(name) {
                Some(v) => (v == *value) != *negate,
                None => false,
            },
            Condition::Number { field, op, value } => {
                let x = match field.as_str() {
                    "order" => r.order,
                    "class_number" => r.class_number,
                    "out_order" => r.out_order,
                    _ => return false,
                };
                match op {
                    Op::Eq => x == *value,
                    Op::Ne => x != *value,
                    Op::Le => x <= *value,
                    Op::Ge => x >= *value,
                    Op::Lt => x < *value,
                    Op::Gt => x > *value,
                }
            }
            Condition::Name { value, negate } => (r.name == *value) != *negate,
        })
    }
}

fn parse_term(term: &str) -> Result<Condition> {
    const OPS: [(&str, Op); 6] = [
        ("<=", Op::Le),
        (">=", Op::Ge),
        ("!=", Op::Ne),
        ("=", Op::Eq),
        ("<", Op::Lt),
        (">", Op::Gt),
    ];
    let (pos, sym, op) = OPS
        .iter()
        .filter_map(|&(sym, op)| term.find(sym).map(|p| (p, sym, op)))
        .min_by_key(|&(p, sym, _)| (p, std::cmp::Reverse(sym.len())))
        .ok_or_else(|| anyhow!("filter term `{term}` has no operator"))?;
    let key = term[..pos].trim();
    let value = term[pos + sym.len()..].trim();
    match key {
        "order" | "class_number" | "out_order" => Ok(Condition::Number {
            field: key.to_string(),
            op,
            value: value
                .parse()
                .map_err(|_| anyhow!("filter term `{term}`: `{value}` is not a number"))?,
        }),
        "name" => match op {
            Op::Eq | Op::Ne => Ok(Condition::Name {
                value: value.to_string(),
                negate: op == Op::Ne,
            }),
            _ => bail!("filter term `{term}`: names only support = and !="),
        },
        flag if Flags::NAMES.contains(&flag) => {
            let value = match value {
                "true" => true,
                "false" => false,
                _ => bail!("filter term `{term}`: flags take true or false"),
            };
            match op {
                Op::Eq | Op::Ne => Ok(Condition::Flag {
                    name: flag.to_string(),
                    value,
                    negate: op == Op::Ne,
                }),
                _ => bail!("filter term `{term}`: flags only support = and !="),
            }
        }
        other => bail!("unknown filter key `{other}`"),
    }
}
