//! CSV export of rank tables.

use std::io::Write;

use qrank_core::overpartitions::RankTables;

use crate::error::Result;

/// Writes `d,m,n,count` rows for every nonzero count, ordered by `n` then `m`.
pub fn write_tables_csv(t: &RankTables, out: impl Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["d", "m", "n", "count"])?;
    let d = t.d().to_string();
    for (m, n, c) in t.entries() {
        w.write_record([d.as_str(), &m.to_string(), &n.to_string(), &c.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use qrank_core::overpartitions::rank_tables;

    #[test]
    fn rows_cover_every_overpartition() {
        let t = rank_tables(1, 4).unwrap();
        let mut buf = Vec::new();
        write_tables_csv(&t, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("d,m,n,count"));
        let at_four: u64 = lines
            .map(|l| l.split(',').collect::<Vec<_>>())
            .filter(|f| f[2] == "4")
            .map(|f| f[3].parse::<u64>().unwrap())
            .sum();
        assert_eq!(at_four, 14);
    }
}
