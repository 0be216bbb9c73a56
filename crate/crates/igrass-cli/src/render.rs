//! Deterministic plain-text renderers for the table-like subcommands.

use serde_json::json;

use crate::rows::Row;

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum, Default)]
pub enum TableFormat {
    #[default]
    Md,
    Csv,
    Json,
}

fn join(xs: &[i64]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn matrix_text(row: &Row) -> String {
    format!("[{}; {}]", join(&row.matrix.0), join(&row.matrix.1))
}

pub fn render_markdown(rows: &[Row]) -> String {
    let mut out = String::new();
    out.push_str("| No. | n | [w_12, w_13, ..., w_(n-1)n] | -K_X | h^0(-K_X) |\n");
    out.push_str("|---|---|---|---|---|\n");
    for r in rows {
        let h0 = r.h0.as_ref().map_or(String::from("-"), |v| v.to_string());
        out.push_str(&format!(
            "| {} | {} | {} | ({},{}) | {} |\n",
            r.no,
            r.variety.n(),
            matrix_text(r),
            r.antican.x,
            r.antican.y,
            h0
        ));
    }
    out
}

pub fn render_csv(rows: &[Row]) -> String {
    let mut out = String::from("no,n,matrix,antican_x,antican_y,fano,h0\n");
    for r in rows {
        let h0 = r.h0.as_ref().map_or(String::new(), |v| v.to_string());
        out.push_str(&format!(
            "{},{},\"{}; {}\",{},{},{},{}\n",
            r.no,
            r.variety.n(),
            join(&r.matrix.0),
            join(&r.matrix.1),
            r.antican.x,
            r.antican.y,
            r.fano,
            h0
        ));
    }
    out
}

pub fn render_json(rows: &[Row]) -> String {
    let docs: Vec<serde_json::Value> = rows
        .iter()
        .map(|r| {
            let mut doc = serde_json::to_value(&r.variety).expect("variety serializes");
            let obj = doc.as_object_mut().expect("object");
            obj.insert("no".into(), json!(r.no));
            obj.insert("matrix".into(), json!([r.matrix.0, r.matrix.1]));
            obj.insert("antican".into(), json!([r.antican.x, r.antican.y]));
            obj.insert("fano".into(), json!(r.fano.to_string()));
            if let Some(h0) = &r.h0 {
                obj.insert("h0".into(), json!(h0.to_string()));
            }
            doc
        })
        .collect();
    serde_json::to_string_pretty(&docs).expect("rows serialize")
}

pub fn render(rows: &[Row], format: TableFormat) -> String {
    match format {
        TableFormat::Md => render_markdown(rows),
        TableFormat::Csv => render_csv(rows),
        TableFormat::Json => render_json(rows),
    }
}
