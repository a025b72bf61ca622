//! Table, JSON and CSV rendering of the output records.
//!
//! The three formats carry the same numeric content. Tables are for
//! reading: left-aligned columns with a header rule. JSON is the record
//! serialized as-is (pretty, trailing newline). CSV uses a fixed header
//! per command — one row per torus class, per condition, or per census —
//! with exact fractions split into `_num`/`_den` columns and list cells
//! joined with `;`.

use serde::Serialize;

use super::schema::{
    AbelianOut, CensusOut, LimitOut, LimitsAllOut, SurjectiveOut, VerifyOut,
};

pub fn render_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output records always serialize");
    s.push('\n');
    s
}

/// Left-aligned columns with two-space gutters; `rows[0]` is the header,
/// separated from the body by a dash rule.
fn align(rows: &[Vec<String>]) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; columns];
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for (r, row) in rows.iter().enumerate() {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            line.push_str(cell);
            if i + 1 < row.len() {
                line.extend(std::iter::repeat_n(' ', widths[i] - cell.chars().count() + 2));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
        if r == 0 {
            let total: usize = widths.iter().sum::<usize>() + 2 * (columns - 1);
            out.push_str(&"-".repeat(total));
            out.push('\n');
        }
    }
    out
}

fn csv_rows(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("csv header");
    for row in rows {
        w.write_record(&row).expect("csv row");
    }
    String::from_utf8(w.into_inner().expect("csv buffer")).expect("csv is utf-8")
}

fn join_u64(xs: &[u64]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(";")
}

fn opt_u64(x: Option<u64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn point_phrase(o: &LimitOut) -> String {
    match (o.q, o.residue) {
        (Some(q), _) => format!("q = {q}"),
        (_, Some(r)) => format!("q = {r} (mod {})", o.m),
        _ => String::new(),
    }
}

pub fn table_limit(o: &LimitOut) -> String {
    let mut s = format!("{}, M = {}, {}\n", o.family, o.m, point_phrase(o));
    s.push_str(&format!("limit |G^M| / |G| = {}\n", o.value.display()));
    if let Some(d) = &o.decimal {
        s.push_str(&format!("decimal (rounded): {d}\n"));
    }
    s.push('\n');
    let mut rows = vec![vec![
        "torus".to_string(),
        "structure".to_string(),
        "|W_T|".to_string(),
        "gcd(M, d_i)".to_string(),
        "term".to_string(),
    ]];
    for t in &o.terms {
        rows.push(vec![
            t.torus.clone(),
            t.structure.clone(),
            t.weyl_order.clone(),
            t.gcds
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join(", "),
            t.term.display(),
        ]);
    }
    s.push_str(&align(&rows));
    s
}

pub fn csv_limit(o: &LimitOut) -> String {
    let header = [
        "torus",
        "structure",
        "weyl_order",
        "gcds",
        "term_num",
        "term_den",
    ];
    let mut rows: Vec<Vec<String>> = o
        .terms
        .iter()
        .map(|t| {
            vec![
                t.torus.clone(),
                t.structure.clone(),
                t.weyl_order.clone(),
                join_u64(&t.gcds),
                t.term.num.clone(),
                t.term.den.clone(),
            ]
        })
        .collect();
    rows.push(vec![
        "(total)".into(),
        String::new(),
        String::new(),
        String::new(),
        o.value.num.clone(),
        o.value.den.clone(),
    ]);
    csv_rows(&header, rows)
}

pub fn table_limits_all(o: &LimitsAllOut) -> String {
    let mut s = format!(
        "{}, M = {}: subsequential limits of |G^M| / |G| as q -> inf\n\n",
        o.family, o.m
    );
    let mut rows = vec![vec!["condition".to_string(), "value".to_string()]];
    let with_decimals = o.entries.iter().any(|e| e.decimal.is_some());
    if with_decimals {
        rows[0].push("decimal".to_string());
    }
    for e in &o.entries {
        let mut row = vec![e.condition.clone(), e.value.display()];
        if with_decimals {
            row.push(e.decimal.clone().unwrap_or_default());
        }
        rows.push(row);
    }
    s.push_str(&align(&rows));
    s.push_str(&format!("\ndistinct values: {}\n", o.distinct_count));
    for [a, b] in &o.collisions {
        s.push_str(&format!("collision: `{a}` and `{b}` share a value below 1\n"));
    }
    s
}

pub fn csv_limits_all(o: &LimitsAllOut) -> String {
    let header = ["condition", "order", "value_num", "value_den"];
    let rows = o
        .entries
        .iter()
        .map(|e| {
            vec![
                e.condition.clone(),
                opt_u64(e.order),
                e.value.num.clone(),
                e.value.den.clone(),
            ]
        })
        .collect();
    csv_rows(&header, rows)
}

pub fn table_census(o: &CensusOut) -> String {
    let mut s = format!("census: {}, q = {}, M = {}\n", o.family, o.q, o.m);
    s.push_str(&format!("group order: {}\n", o.group_order));
    s.push_str(&format!(
        "limit value at q = {}: {}\n\n",
        o.q,
        o.limit_value.display()
    ));
    let rows = vec![
        vec![
            "class".to_string(),
            "total".to_string(),
            "M-th powers".to_string(),
            "proportion".to_string(),
            "deviation".to_string(),
        ],
        vec![
            "all elements".into(),
            o.group_order.clone(),
            o.power_image.clone(),
            o.proportion_image.display(),
            o.deviation_image.display(),
        ],
        vec![
            "regular semisimple".into(),
            o.total_rs.clone(),
            o.power_rs.clone(),
            o.proportion_rs.display(),
            o.deviation_rs.display(),
        ],
        vec![
            "semisimple".into(),
            o.total_ss.clone(),
            o.power_ss.clone(),
            o.proportion_ss.display(),
            o.deviation_ss.display(),
        ],
        vec![
            "regular".into(),
            o.total_rg.clone(),
            o.power_rg.clone(),
            o.proportion_rg.display(),
            o.deviation_rg.display(),
        ],
    ];
    s.push_str(&align(&rows));
    s
}

pub fn csv_census(o: &CensusOut) -> String {
    let header = [
        "family",
        "n",
        "q",
        "m",
        "group_order",
        "power_image",
        "power_rs",
        "power_ss",
        "power_rg",
        "total_rs",
        "total_ss",
        "total_rg",
        "prop_image_num",
        "prop_image_den",
        "prop_rs_num",
        "prop_rs_den",
        "prop_ss_num",
        "prop_ss_den",
        "prop_rg_num",
        "prop_rg_den",
        "limit_num",
        "limit_den",
        "dev_image_num",
        "dev_image_den",
        "dev_rs_num",
        "dev_rs_den",
        "dev_ss_num",
        "dev_ss_den",
        "dev_rg_num",
        "dev_rg_den",
    ];
    let row = vec![
        o.family.clone(),
        o.n.to_string(),
        o.q.to_string(),
        o.m.to_string(),
        o.group_order.clone(),
        o.power_image.clone(),
        o.power_rs.clone(),
        o.power_ss.clone(),
        o.power_rg.clone(),
        o.total_rs.clone(),
        o.total_ss.clone(),
        o.total_rg.clone(),
        o.proportion_image.num.clone(),
        o.proportion_image.den.clone(),
        o.proportion_rs.num.clone(),
        o.proportion_rs.den.clone(),
        o.proportion_ss.num.clone(),
        o.proportion_ss.den.clone(),
        o.proportion_rg.num.clone(),
        o.proportion_rg.den.clone(),
        o.limit_value.num.clone(),
        o.limit_value.den.clone(),
        o.deviation_image.num.clone(),
        o.deviation_image.den.clone(),
        o.deviation_rs.num.clone(),
        o.deviation_rs.den.clone(),
        o.deviation_ss.num.clone(),
        o.deviation_ss.den.clone(),
        o.deviation_rg.num.clone(),
        o.deviation_rg.den.clone(),
    ];
    csv_rows(&header, vec![row])
}

pub fn table_abelian(o: &AbelianOut) -> String {
    let group = if o.factors.is_empty() {
        "C_1 (trivial)".to_string()
    } else {
        o.factors
            .iter()
            .map(|d| format!("C_{d}"))
            .collect::<Vec<_>>()
            .join(" x ")
    };
    let mut s = format!("abelian group {group}, M = {}\n", o.m);
    s.push_str(&format!("formula |H^M| / |H| = {}\n", o.formula.display()));
    match &o.census {
        Some(c) => s.push_str(&format!(
            "census: {} of {} = {} ({})\n",
            c.image,
            c.order,
            c.ratio.display(),
            if c.agrees { "agrees" } else { "DISAGREES" }
        )),
        None => s.push_str("census: skipped (order exceeds the abelian cap)\n"),
    }
    s
}

pub fn csv_abelian(o: &AbelianOut) -> String {
    let header = [
        "factors",
        "m",
        "formula_num",
        "formula_den",
        "census_image",
        "census_order",
        "census_num",
        "census_den",
        "agrees",
    ];
    let census = o.census.as_ref();
    let row = vec![
        join_u64(&o.factors),
        o.m.to_string(),
        o.formula.num.clone(),
        o.formula.den.clone(),
        census.map(|c| c.image.clone()).unwrap_or_default(),
        census.map(|c| c.order.clone()).unwrap_or_default(),
        census.map(|c| c.ratio.num.clone()).unwrap_or_default(),
        census.map(|c| c.ratio.den.clone()).unwrap_or_default(),
        census.map(|c| c.agrees.to_string()).unwrap_or_default(),
    ];
    csv_rows(&header, vec![row])
}

pub fn table_surjective(o: &SurjectiveOut) -> String {
    let mut s = format!("x -> x^M on GL({}, {}), M = {}\n", o.n, o.q, o.m);
    s.push_str(&format!("surjective: {}\n\n", o.surjective));
    s.push_str(&format!("gcd(M, q) = {}\n", o.gcd_m_q));
    match o.order_of_q_mod_m {
        Some(a) => s.push_str(&format!(
            "ord(q mod M) = {a} {} n = {}  =>  order criterion {}\n",
            if a > u64::from(o.n) { ">" } else { "<=" },
            o.n,
            o.by_order
        )),
        None => s.push_str(&format!(
            "ord(q mod M) undefined (M divides q)  =>  order criterion {}\n",
            o.by_order
        )),
    }
    s.push_str(&format!(
        "gcd(M, |GL(n,q)|) = {} with |GL(n,q)| = {}  =>  gcd criterion {}\n",
        o.gcd_m_group_order, o.group_order, o.by_group_order
    ));
    s
}

pub fn csv_surjective(o: &SurjectiveOut) -> String {
    let header = [
        "n",
        "q",
        "m",
        "surjective",
        "gcd_m_q",
        "order_of_q_mod_m",
        "group_order",
        "gcd_m_group_order",
        "by_order",
        "by_group_order",
    ];
    let row = vec![
        o.n.to_string(),
        o.q.to_string(),
        o.m.to_string(),
        o.surjective.to_string(),
        o.gcd_m_q.to_string(),
        opt_u64(o.order_of_q_mod_m),
        o.group_order.clone(),
        o.gcd_m_group_order.clone(),
        o.by_order.to_string(),
        o.by_group_order.to_string(),
    ];
    csv_rows(&header, vec![row])
}

pub fn table_verify(o: &VerifyOut) -> String {
    let mut s = format!("verify: {}, q = {}, M = {}\n", o.family, o.q, o.m);
    s.push_str(&format!(
        "limit value: {}; tolerance: bound {} / q = {}\n\n",
        o.limit_value.display(),
        o.bound.display(),
        o.tolerance.display()
    ));
    let mut rows = vec![vec![
        "class".to_string(),
        "M-th powers".to_string(),
        "proportion".to_string(),
        "deviation".to_string(),
        "within".to_string(),
    ]];
    for r in &o.rows {
        rows.push(vec![
            r.class.clone(),
            r.count.clone(),
            r.proportion.display(),
            r.deviation.display(),
            if r.within { "yes".into() } else { "NO".into() },
        ]);
    }
    s.push_str(&align(&rows));
    s.push_str(&format!(
        "\n{}: all four proportions {} within {} of the limit\n",
        if o.pass { "PASS" } else { "FAIL" },
        if o.pass { "are" } else { "are not" },
        o.tolerance.display()
    ));
    s
}

pub fn csv_verify(o: &VerifyOut) -> String {
    let header = [
        "class",
        "count",
        "proportion_num",
        "proportion_den",
        "deviation_num",
        "deviation_den",
        "within",
    ];
    let rows = o
        .rows
        .iter()
        .map(|r| {
            vec![
                r.class.clone(),
                r.count.clone(),
                r.proportion.num.clone(),
                r.proportion.den.clone(),
                r.deviation.num.clone(),
                r.deviation.den.clone(),
                r.within.to_string(),
            ]
        })
        .collect();
    csv_rows(&header, rows)
}
