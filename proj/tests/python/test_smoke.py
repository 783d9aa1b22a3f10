import pytest

import gl2dist

BIQ = "K=sqrt(p);L=sqrt(u)"
CYC = "K=sqrt(u);L=sqrt(uK)"
NG = "K=sqrt(p);L=4rt(p)"


def test_classify():
    assert gl2dist.classify(BIQ)["type"] == "Biquadratic"
    ng = gl2dist.classify(NG, p=3)
    assert ng["type"] == "NonGalois"
    assert ng["fields"]["aut_M_order"] == 8
    assert gl2dist.classify(NG, p=5)["type"] == "Cyclic"


def test_decide():
    assert gl2dist.decide(BIQ, "t=1/2;m=2")["verdict"] == "distinguished"
    v = gl2dist.decide(CYC, "t=1/4;m=1")
    assert v["verdict"] == "not-distinguished"
    assert v["plus_distinguished"] is False


def test_enumerate_counts_match_rows():
    e = gl2dist.enumerate(BIQ, regular_only=True, max_denominator=4)
    verdicts = [r["verdict"] for r in e["rows"]]
    assert e["counts"]["distinguished"] == verdicts.count("distinguished")
    assert e["counts"]["eta_distinguished"] == verdicts.count("eta-distinguished")
    assert gl2dist.enumerate(CYC, regular_only=True)["counts"]["distinguished"] == 0


def test_epsilon_and_oracle():
    fq = gl2dist.epsilon(BIQ, "t=1/2;m=0", pair="L/K'")
    assert fq["epsilon"]["provenance"] == "FQ"
    both = gl2dist.epsilon(BIQ, "t=1/2;m=0", pair="L/K'", gauss=True)
    assert both["oracle_error"] < 1e-9


def test_hakim():
    assert gl2dist.hakim(BIQ, "t=1/2;m=2")["report"]["holds"] is True


def test_errors():
    with pytest.raises(gl2dist.ParseError):
        gl2dist.classify("K=sqrt(x)")
    with pytest.raises(gl2dist.MathError):
        gl2dist.classify("K=sqrt(4)")
    with pytest.raises(gl2dist.RegimeRefusal):
        gl2dist.epsilon(BIQ, "t=1/4;m=0", pair="K/F")


def test_verify_paper_single_criterion():
    r = gl2dist.verify_paper(only=12)
    assert r["all_pass"] is True
    assert r["criteria"][0]["id"] == 12
