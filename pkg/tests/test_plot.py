import re

from qeuclid.covering import Certificate, shipped_certificate
from qeuclid.plot import render_svg, render_tikz


def test_m7_svg():
    svg = render_svg(shipped_certificate(7))
    owners = set(re.findall(r'data-owner="([^"]+)"', svg))
    assert len(owners) == 4
    labels = set(re.findall(r">(P\w+)</text>", svg))
    assert "Pc" in labels
    assert {f"P{k}" for k in range(9)} <= labels


def test_empty_certificate_is_bare_square():
    svg = render_svg(Certificate(m=2, M=1))
    assert "<polygon" not in svg and "<rect" in svg


def test_tikz_standalone():
    tex = render_tikz(shipped_certificate(6))
    assert tex.startswith(r"\documentclass[tikz]{standalone}")
    assert tex.rstrip().endswith(r"\end{document}")
    assert tex.count(r"\filldraw") == len(shipped_certificate(6).regions)
    body = render_tikz(shipped_certificate(6), standalone=False)
    assert body.startswith(r"\begin{tikzpicture}")
