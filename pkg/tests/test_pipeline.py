import json

import pytest

from witt_uniq import graphs, pipeline, sphere
from witt_uniq.pipeline import Certificate, PipelineConfig, render_report, run_pipeline


def statuses(cert):
    return {s.name: s.status for s in cert.stages}


def test_corrupted_L_fails_stage_2():
    cert = run_pipeline(PipelineConfig(corrupt_expected_L=True))
    st = statuses(cert)
    assert st["design"] == "pass" and st["scheme"] == "fail"
    assert all(st[n] == "skipped" for _, n in pipeline.STAGES[2:])
    assert cert.verdict == "fail"
    rec = cert.stage("scheme")
    assert rec.witnesses["failure"] == [1, 1, 1, 15, 16]
    assert "p[1][1][1]" in rec.message


@pytest.fixture
def quick_lemma2(monkeypatch):
    real = sphere.lemma2_check

    def sliced(f, Y1, c2, cliques, **kw):
        return real(f, Y1, c2, list(cliques)[:300], **kw)

    monkeypatch.setattr(sphere, "lemma2_check", sliced)


def test_stage5_uses_cache(tmp_path, monkeypatch, quick_lemma2):
    cfg = PipelineConfig(stage=5, cache_dir=str(tmp_path))
    first = run_pipeline(cfg)
    assert statuses(first)["lemma2"] == "pass"
    assert {f.name for f in tmp_path.iterdir()} >= {"y1.txt", "y1.txt.sha256",
                                                    "cliques10.txt", "cliques10.txt.sha256"}

    def boom(*a, **k):
        raise AssertionError("recomputed despite cache")

    monkeypatch.setattr(sphere, "enumerate_Y1", boom)
    monkeypatch.setattr(graphs, "enumerate_cliques", boom)
    second = run_pipeline(PipelineConfig(stage=5, cache_dir=str(tmp_path)))
    st = statuses(second)
    assert st["lemma2"] == "pass"
    assert [n for n, s in st.items() if s != "skipped"] == ["lemma2"]
    assert second.verdict == "partial"
    assert second.stage("lemma2").counts == first.stage("lemma2").counts
    assert second.stage("lemma2").digests == first.stage("lemma2").digests


def test_stale_cache_is_recomputed(tmp_path, monkeypatch):
    monkeypatch.setenv(pipeline.CACHE_ENV, str(tmp_path))
    run_pipeline(PipelineConfig(stage=1))
    design = tmp_path / "design.txt"
    assert design.exists()
    design.write_text(design.read_text().replace("1,2,3", "1,2,4", 1))
    cert = run_pipeline(PipelineConfig(stage=1))
    assert cert.stage("design").status == "pass"
    assert (tmp_path / "design.txt.sha256").read_text().split()[0] == \
        pipeline.sha256_text(design.read_text())


def test_single_stage_runs_are_partial():
    cert = run_pipeline(PipelineConfig(stage=3))
    assert statuses(cert)["eigenmatrices"] == "pass"
    assert cert.verdict == "partial"
    assert cert.stage("eigenmatrices").witnesses["angle_set"] == ["4/15", "-1/10", "-7/15"]


def test_json_round_trip(full_run):
    text = render_report(full_run, "json")
    assert text == render_report(full_run, "json")
    back = Certificate.from_json(json.loads(text))
    assert render_report(back, "json") == text
    data = json.loads(text)
    assert data["schema"] == pipeline.SCHEMA and data["verdict"] == "pass"
    assert [s["name"] for s in data["stages"]] == [n for _, n in pipeline.STAGES]
    assert "wall_times_ms" not in json.loads(render_report(full_run, "json", include_timings=False))


def test_unknown_schema_rejected():
    with pytest.raises(ValueError):
        Certificate.from_json({"schema": "other/1", "stages": []})


def test_text_report(full_run):
    text = render_report(full_run, "text")
    assert "verdict: PASS" in text
    assert "(66,20,10,4)" in text
    assert "external axiom: Chang" in text
    assert "Delsarte clique bound" in text
    assert "L1: computed | expected" in text
    assert "P Q = 66 I" in text
    with pytest.raises(ValueError):
        render_report(full_run, "xml")


def test_full_run_counts(full_run):
    c = {k: v for s in full_run.stages for k, v in s.counts.items()}
    assert c["solutions_found"] >= 1
    assert (c["y1"], c["cliques10"], c["y"], c["z"], c["z1"], c["z2"]) == (840, 30240, 4610, 90, 45, 45)
    assert full_run.stage("srg_t12").axioms_used == ["chang", "delsarte_clique_bound"]
