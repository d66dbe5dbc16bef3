//! Group table file format: `{"order": n, "mul": [[..]], "names": [..]}`
//! with the identity at index 0. Load/store round-trips the mul table
//! bit-exactly.

use crate::group::GroupTable;
use crate::{Bounds, Error, Result};
use serde::{Deserialize, Serialize};
use std::io::{Read, Write};

#[derive(Debug, Serialize, Deserialize)]
struct GroupTableFile {
    order: usize,
    mul: Vec<Vec<u16>>,
    names: Vec<String>,
}

pub fn default_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| if i == 0 { "e".to_string() } else { format!("g{i}") })
        .collect()
}

pub fn to_json(g: &GroupTable, names: Option<Vec<String>>) -> Result<serde_json::Value> {
    let names = names.unwrap_or_else(|| default_names(g.order()));
    if names.len() != g.order() {
        return Err(Error::domain("names length must equal the order"));
    }
    let mul: Vec<Vec<u16>> = (0..g.order())
        .map(|a| (0..g.order()).map(|b| g.mul(a, b) as u16).collect())
        .collect();
    Ok(serde_json::to_value(GroupTableFile {
        order: g.order(),
        mul,
        names,
    })?)
}

pub fn write_to<W: Write>(g: &GroupTable, names: Option<Vec<String>>, mut w: W) -> Result<()> {
    let v = to_json(g, names)?;
    serde_json::to_writer_pretty(&mut w, &v)?;
    w.write_all(b"\n")?;
    Ok(())
}

pub fn read_from<R: Read>(r: R, bounds: &Bounds) -> Result<GroupTable> {
    let file: GroupTableFile = serde_json::from_reader(r)?;
    if file.mul.len() != file.order {
        return Err(Error::BadTable(format!(
            "declared order {} but mul has {} rows",
            file.order,
            file.mul.len()
        )));
    }
    if file.names.len() != file.order {
        return Err(Error::BadTable("names length must equal the order".into()));
    }
    GroupTable::from_mul_table(file.mul, bounds)
}

pub fn save(g: &GroupTable, names: Option<Vec<String>>, path: &std::path::Path) -> Result<()> {
    let f = std::fs::File::create(path)?;
    write_to(g, names, std::io::BufWriter::new(f))
}

pub fn load(path: &std::path::Path, bounds: &Bounds) -> Result<GroupTable> {
    let f = std::fs::File::open(path)?;
    read_from(std::io::BufReader::new(f), bounds)
}
