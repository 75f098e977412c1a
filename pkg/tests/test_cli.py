import json

from yprobe.cli import main
from yprobe.presets import get_preset


def run(*argv):
    return main(list(argv))


class TestProbeSpectrum:
    def test_preset_run_writes_csv_and_config(self, tmp_path):
        out = tmp_path / "fig3.csv"
        assert run("probe-spectrum", "--preset", "fig3", "--points", "21",
                   "--out", str(out)) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "delta1,re_chi,im_chi,slope"
        assert len(lines) == 22
        config = json.loads((tmp_path / "fig3.csv.config.json").read_text())
        assert config["n_points"] == 21
        assert config["W12"] == -0.75

    def test_config_round_trip_is_byte_identical(self, tmp_path):
        first = tmp_path / "a.csv"
        run("probe-spectrum", "--preset", "fig3", "--points", "15",
            "--out", str(first))
        second = tmp_path / "b.csv"
        assert run("probe-spectrum", "--config", str(first) + ".config.json",
                   "--out", str(second)) == 0
        assert first.read_bytes() == second.read_bytes()

    def test_k_value_adds_velocity_column(self, tmp_path):
        out = tmp_path / "k.csv"
        run("probe-spectrum", "--preset", "fig3", "--points", "3",
            "--k-value", "250", "--out", str(out))
        lines = out.read_text().splitlines()
        assert lines[0].endswith(",c_over_vg")
        assert len(lines[1].split(",")) == 5

    def test_json_mirror(self, tmp_path):
        out = tmp_path / "m.csv"
        run("probe-spectrum", "--preset", "fig3", "--points", "4",
            "--json", "--out", str(out))
        records = json.loads((tmp_path / "m.csv.json").read_text())
        assert len(records) == 4
        assert set(records[0]) == {"delta1", "re_chi", "im_chi", "slope"}

    def test_v_system_preset(self, tmp_path):
        out = tmp_path / "v.csv"
        assert run("probe-spectrum", "--preset", "fig5b", "--points", "5",
                   "--out", str(out)) == 0
        assert len(out.read_text().splitlines()) == 6


class TestErrorHandling:
    def test_unknown_config_key_fails_with_json_record(self, tmp_path, capsys):
        cfg = tmp_path / "bad.json"
        data = get_preset("fig3").params.to_dict()
        data.update(delta1_min=-1.0, delta1_max=1.0, n_points=3, typo_key=1)
        cfg.write_text(json.dumps(data))
        assert run("probe-spectrum", "--config", str(cfg),
                   "--out", str(tmp_path / "x.csv")) == 1
        record = json.loads(capsys.readouterr().err)
        assert record["error"] == "ParameterError"
        assert "typo_key" in record["message"]

    def test_requires_preset_or_config(self, tmp_path, capsys):
        assert run("probe-spectrum", "--out", str(tmp_path / "x.csv")) == 1
        assert "preset" in json.loads(capsys.readouterr().err)["message"]

    def test_empty_grid_rejected(self, tmp_path, capsys):
        assert run("probe-spectrum", "--preset", "fig3", "--points", "0",
                   "--out", str(tmp_path / "x.csv")) == 1
        assert "non-empty" in json.loads(capsys.readouterr().err)["message"]

    def test_dressed_evolve_rejects_unlocked_parameters(self, tmp_path, capsys):
        cfg = tmp_path / "unlocked.json"
        data = get_preset("fig7").params.to_dict()
        data.update(W12=4.0, t_max=10.0, dt=0.01, store_every=1)
        cfg.write_text(json.dumps(data))
        assert run("dressed-evolve", "--config", str(cfg),
                   "--out", str(tmp_path / "x.csv")) == 1
        assert "W12" in json.loads(capsys.readouterr().err)["message"]


class TestOtherCommands:
    def test_interference_sweep(self, tmp_path):
        out = tmp_path / "sweep.csv"
        assert run("interference-sweep", "--preset", "fig4", "--points", "5",
                   "--out", str(out)) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "p,slope_normalized"
        assert len(lines) == 6
        assert float(lines[1].split(",")[0]) == 0.0

    def test_pump_sweeps_writes_two_files(self, tmp_path):
        out = tmp_path / "pump.csv"
        assert run("pump-sweeps", "--preset", "fig8", "--points", "3",
                   "--out", str(out)) == 0
        pops = (tmp_path / "pump_populations.csv").read_text().splitlines()
        cohs = (tmp_path / "pump_coherences.csv").read_text().splitlines()
        assert pops[0] == "delta2,rho11,rho22,rho33"
        assert cohs[0] == "delta2,re_rho23,im_rho23,re_rho34,im_rho34"
        assert len(pops) == len(cohs) == 4

    def test_dressed_evolve_summary_and_oracle_column(self, tmp_path, capsys):
        cfg = tmp_path / "evolve.json"
        data = get_preset("fig7").params.to_dict()
        data.update(t_max=300.0, dt=0.01, store_every=10)
        cfg.write_text(json.dumps(data))
        out = tmp_path / "evolve.csv"
        assert run("dressed-evolve", "--config", str(cfg), "--oracle-check",
                   "--out", str(out)) == 0
        summary = json.loads(capsys.readouterr().out)
        assert summary["steady"]["rho11"] > 0.5
        assert abs(summary["steady"]["rho11"] - summary["full_me_rho11_steady"]) \
            < 0.15 * summary["full_me_rho11_steady"]
        lines = out.read_text().splitlines()
        assert lines[0].endswith(",rho11_full")
        # secular and full trajectories track each other on the way up too
        last = lines[-1].split(",")
        assert abs(float(last[1]) - float(last[-1])) < 0.1

    def test_dump_liouvillian(self, tmp_path):
        out = tmp_path / "lv.json"
        assert run("dump-liouvillian", "--preset", "fig2b",
                   "--out", str(out)) == 0
        data = json.loads(out.read_text())
        assert len(data["labels"]) == 15
        assert len(data["m0"]) == 15 and len(data["m0"][0]) == 15
        assert data["sigma"][8] == [0.0, -get_preset("fig2b").params.Omega3]
