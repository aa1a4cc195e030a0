# services/rendering/picture_renderer.py
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction

import pandas as pd
from lxml import etree

from core.config import DECIMAL_PLACES, RENDER_FORMAT_VERSION, SVG_VIEWBOX_SIZE
from exactmath import format_rat

SVG_NS = "http://www.w3.org/2000/svg"


def _svg(tag):
    return f"{{{SVG_NS}}}{tag}"


# Frame corners on the reference 600x600 canvas.
FRAME_POSITIONS = {"A": (300, 60), "B": (60, 540), "C": (540, 540)}
LABEL_OFFSETS = {"A": (8, -8), "B": (-22, 18), "C": (8, 18), "D": (-22, -4), "E": (8, -4)}


def to_decimal_string(value, places=DECIMAL_PLACES):
    """Exact rational rounded half-even to a fixed number of places."""
    with localcontext() as ctx:
        ctx.prec = 60
        quantum = Decimal(1).scaleb(-places)
        result = (Decimal(value.numerator) / Decimal(value.denominator)).quantize(quantum, rounding=ROUND_HALF_EVEN)
    if result == 0:
        result = abs(result)
    return f"{result:.{places}f}"


def canvas_position(weights, size=SVG_VIEWBOX_SIZE):
    scale = Fraction(size, 600)
    x = sum(w * FRAME_POSITIONS[k][0] for w, k in zip(weights, "ABC"))
    y = sum(w * FRAME_POSITIONS[k][1] for w, k in zip(weights, "ABC"))
    return x * scale, y * scale


def _legend_lines(picture):
    lines = [
        f"g={picture.params.g}, d={picture.params.d}, n={picture.params.rank}",
        f"tau = {format_rat(picture.tau)} (printed {format_rat(picture.tau_printed)})",
        f"rho = {format_rat(picture.rho)} (printed {format_rat(picture.rho_printed)})",
    ]
    for label in ("D", "E"):
        weights = ", ".join(format_rat(w) for w in picture.points[label].weights)
        lines.append(f"{label} weights (A, B, C) = ({weights})")
    lines.extend(picture.notes)
    if picture.flags:
        lines.append("flags: " + ", ".join(picture.flags))
    return lines


def render_svg(picture, size=SVG_VIEWBOX_SIZE):
    positions = {label: canvas_position(point.weights, size) for label, point in picture.points.items()}
    fmt = {label: (to_decimal_string(x), to_decimal_string(y)) for label, (x, y) in positions.items()}

    root = etree.Element(_svg("svg"), nsmap={None: SVG_NS})
    root.set("width", str(size))
    root.set("height", str(size))
    root.set("viewBox", f"0 0 {size} {size}")
    desc = etree.SubElement(root, _svg("desc"))
    desc.text = f"nef cone cross-section, format-version {RENDER_FORMAT_VERSION}"

    upper = etree.SubElement(root, _svg("polygon"))
    upper.set("id", "upper")
    upper.set("points", " ".join(",".join(fmt[k]) for k in "ABC"))
    upper.set("fill", "none")
    upper.set("stroke", "black")

    lower = etree.SubElement(root, _svg("polygon"))
    lower.set("id", "lower")
    lower.set("points", " ".join(",".join(fmt[k]) for k in "DBCE"))
    lower.set("fill", "#dde8f5")
    lower.set("stroke", "#2b5d9b")

    for label in ("A", "B", "C", "D", "E"):
        x, y = fmt[label]
        dot = etree.SubElement(root, _svg("circle"))
        dot.set("id", f"point-{label}")
        dot.set("cx", x)
        dot.set("cy", y)
        dot.set("r", "4")
        text = etree.SubElement(root, _svg("text"))
        dx, dy = LABEL_OFFSETS[label]
        text.set("x", to_decimal_string(positions[label][0] + dx))
        text.set("y", to_decimal_string(positions[label][1] + dy))
        text.text = label

    legend = etree.SubElement(root, _svg("g"))
    legend.set("id", "legend")
    legend.set("font-size", "11")
    for i, line in enumerate(_legend_lines(picture)):
        text = etree.SubElement(legend, _svg("text"))
        text.set("x", "10")
        text.set("y", str(16 + 14 * i))
        text.text = line

    return etree.tostring(root, pretty_print=True, xml_declaration=True, encoding="UTF-8").decode("utf-8")


def render_tikz(picture):
    positions = {label: canvas_position(point.weights, 600) for label, point in picture.points.items()}
    lines = [f"% nef cone cross-section, format-version {RENDER_FORMAT_VERSION}",
             "\\begin{tikzpicture}[scale=0.01]"]
    for label in ("A", "B", "C", "D", "E"):
        x, y = positions[label]
        lines.append(f"  \\coordinate ({label}) at ({to_decimal_string(x)}, {to_decimal_string(600 - y)});")
    lines.append("  \\draw (A) -- (B) -- (C) -- cycle;")
    lines.append("  \\filldraw[fill=blue!10, draw=blue!60] (D) -- (B) -- (C) -- (E) -- cycle;")
    anchors = {"A": "above", "B": "below left", "C": "below right", "D": "left", "E": "right"}
    for label in ("A", "B", "C", "D", "E"):
        lines.append(f"  \\fill ({label}) circle (3) node[{anchors[label]}] {{${label}$}};")
    for line in _legend_lines(picture):
        lines.append(f"  % {line}")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def picture_dataframe(picture):
    rows = []
    for label in ("A", "B", "C", "D", "E"):
        point = picture.points[label]
        w_a, w_b, w_c = (format_rat(w) for w in point.weights)
        rows.append({"point": label, "class": "(" + ", ".join(point.divisor.canonical().to_strings()) + ")",
                     "w_A": w_a, "w_B": w_b, "w_C": w_c})
    return pd.DataFrame(rows, columns=["point", "class", "w_A", "w_B", "w_C"])


def render_table(picture):
    lines = [picture_dataframe(picture).to_string(index=False)]
    lines.extend(_legend_lines(picture))
    return "\n".join(lines) + "\n"


RENDERERS = {"svg": render_svg, "tikz": render_tikz, "table": render_table}
