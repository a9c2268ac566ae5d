import json

from freecart import run_cli


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_check_prints_type(tmp_path, capsys):
    f = write(tmp_path, "f.term", "p1{p,q}\n")
    assert run_cli(["check", f]) == 0
    assert capsys.readouterr().out == "p * q -> p\n"


def test_check_rejects_ill_typed(tmp_path, capsys):
    f = write(tmp_path, "f.term", "<id{p}, id{q}>\n")
    assert run_cli(["check", f]) == 2
    assert "domain" in capsys.readouterr().err


def test_graph_json(tmp_path, capsys):
    f = write(tmp_path, "f.term", "# running example\nid{((p*q)*p)*(T*p)}\n")
    assert run_cli(["graph", f]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {
        "map": [1, 2, 3, 4],
        "source_letters": 4,
        "target_letters": 4,
    }


def test_normalize_with_trace(tmp_path, capsys):
    f = write(tmp_path, "f.term", "id{p*q}\n")
    assert run_cli(["normalize", "--trace", f]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[-1] == "<p1{p,q}, p2{p,q}>"
    assert out.splitlines()[0].startswith("step 1: atomize-product at []")


def test_equal_verdicts(tmp_path, capsys):
    f = write(tmp_path, "f.term", "id{p*q}\n")
    g = write(tmp_path, "g.term", "<p1{p,q}, p2{p,q}>\n")
    assert run_cli(["equal", f, g]) == 0
    assert capsys.readouterr().out == "equal\n"
    h = write(tmp_path, "h.term", "<p2{q,p} . swap{p,q}, p2{p,q}>\n")
    assert run_cli(["equal", "--method", "graph", f, h]) == 0
    capsys.readouterr()
    i = write(tmp_path, "i.term", "<p1{p,p}, p1{p,p}>\n")
    j = write(tmp_path, "j.term", "<p1{p,p}, p2{p,p}>\n")
    assert run_cli(["equal", i, j]) == 1
    assert capsys.readouterr().out == "not equal\n"


def test_equal_methods_agree(tmp_path, capsys):
    f = write(tmp_path, "f.term", "p1{(p*q),(p*q)} . <id{p*q}, id{p*q}> . id{p*q}\n")
    g = write(tmp_path, "g.term", "id{p*q} . <p1{p,q}, p2{p,q}>\n")
    for method in ("graph", "normalize", "both"):
        assert run_cli(["equal", "--method", method, f, g]) == 0
        capsys.readouterr()


def test_collapse_witness_json(tmp_path, capsys):
    f = write(tmp_path, "f.term", "p1{p,p}\n")
    g = write(tmp_path, "g.term", "p2{p,p}\n")
    assert run_cli(["collapse", f, g]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["letter"] == "p"
    assert payload["position"] == 1
    assert payload["h"] == "<p1{p,p}, p2{p,p}>"
    assert payload["j"] == "id{p}"
    assert payload["lhs_normal"] == "p1{p,p}"
    assert payload["rhs_normal"] == "p2{p,p}"
    assert payload["lhs_graph"] == {"map": [1], "source_letters": 2, "target_letters": 1}
    assert payload["rhs_graph"] == {"map": [2], "source_letters": 2, "target_letters": 1}


def test_collapse_on_equal_pair_is_a_false_verdict(tmp_path, capsys):
    f = write(tmp_path, "f.term", "id{p}\n")
    g = write(tmp_path, "g.term", "id{p}\n")
    assert run_cli(["collapse", f, g]) == 1
    assert "equal" in capsys.readouterr().err


def test_synth(tmp_path, capsys):
    assert run_cli(["synth", "p*q", "q", "[2]"]) == 0
    assert capsys.readouterr().out == "p2{p,q}\n"
    assert run_cli(["synth", "p", "p*p", "[1,1]"]) == 0
    assert capsys.readouterr().out == "<id{p}, id{p}>\n"
    assert run_cli(["synth", "p*q", "T", "[]"]) == 0
    assert capsys.readouterr().out == "bang{p*q}\n"


def test_synth_rejects_bad_graphs(tmp_path, capsys):
    assert run_cli(["synth", "p*q", "p", "[2]"]) == 2
    capsys.readouterr()
    assert run_cli(["synth", "p*q", "p", "[7]"]) == 2
    capsys.readouterr()
    assert run_cli(["synth", "p*q", "p", "not json"]) == 2
    capsys.readouterr()


def test_mode_flag_rejects_terminal_material(tmp_path, capsys):
    f = write(tmp_path, "f.term", "bang{p}\n")
    assert run_cli(["--mode", "binary-products", "check", f]) == 2
    assert "binary-products" in capsys.readouterr().err
    g = write(tmp_path, "g.term", "id{p*T}\n")
    assert run_cli(["--mode", "binary-products", "graph", g]) == 2
    capsys.readouterr()
    h = write(tmp_path, "h.term", "sigma{q}\n")
    assert run_cli(["--mode", "binary-products", "normalize", h]) == 2
    capsys.readouterr()


def test_usage_errors_exit_2(capsys):
    assert run_cli([]) == 2
    capsys.readouterr()
    assert run_cli(["equal", "only-one-file"]) == 2
    capsys.readouterr()


def test_missing_file(tmp_path, capsys):
    assert run_cli(["check", str(tmp_path / "absent.term")]) == 2
    assert "cannot read" in capsys.readouterr().err


def test_parse_error_has_location(tmp_path, capsys):
    f = write(tmp_path, "f.term", "p1{p\n")
    assert run_cli(["check", f]) == 2
    err = capsys.readouterr().err
    assert "f.term" in err and "error" in err
