use std::path::Path;

use bireg::fueter::run_and_certify;
use bireg::json::{JobFile, JobSpec, ResultDoc};
use rayon::prelude::*;
use serde_json::json;

use crate::io::{create_dir, emit, write_atomic, CliError, CliResult, Status};

struct Outcome {
    key: String,
    status: Status,
    doc: Option<ResultDoc>,
    message: Option<String>,
}

fn run_one(spec: &JobSpec) -> Outcome {
    let key = spec.key();
    let result = spec.build().and_then(|job| run_and_certify(&job));
    match result {
        Ok(res) => {
            let doc = ResultDoc::new(spec, &res);
            let status = if doc.biregular {
                Status::Pass
            } else {
                Status::Failure
            };
            Outcome {
                key,
                status,
                doc: Some(doc),
                message: None,
            }
        }
        Err(err) => Outcome {
            key,
            status: Status::of(&err),
            doc: None,
            message: Some(err.to_string()),
        },
    }
}

/// Runs every job, writes results, and returns the worst status.
pub fn run(file: &JobFile, out: Option<&Path>) -> CliResult<Status> {
    let jobs = file.jobs();
    let outcomes: Vec<Outcome> = jobs.par_iter().map(run_one).collect();

    match file {
        JobFile::Single(_) => {
            let o = &outcomes[0];
            if let Some(msg) = &o.message {
                return Err(CliError {
                    status: o.status,
                    message: msg.clone(),
                });
            }
            let text = o.doc.as_ref().expect("result document").to_string_pretty();
            match out {
                Some(path) => write_atomic(path, &text)?,
                None => emit(&text),
            }
        }
        JobFile::Grid(_) => {
            if let Some(dir) = out {
                create_dir(dir)?;
            }
            for o in &outcomes {
                if let (Some(dir), Some(doc)) = (out, &o.doc) {
                    write_atomic(
                        &dir.join(format!("{}.json", o.key)),
                        &doc.to_string_pretty(),
                    )?;
                }
                let mut line = json!({
                    "case": o.key,
                    "status": o.status as u8,
                    "biregular": o.doc.as_ref().is_some_and(|d| d.biregular),
                });
                if let Some(msg) = &o.message {
                    line["error"] = json!(msg);
                }
                emit(&line.to_string());
            }
        }
    }
    Ok(outcomes
        .iter()
        .map(|o| o.status)
        .max()
        .unwrap_or(Status::Pass))
}
