"""
Escritura de artefactos: trazas, agregados, razones de costo y gráficos SVG.
"""
import csv
import logging
from collections import defaultdict
from pathlib import Path

from django.conf import settings
from reportlab.graphics import renderSVG
from reportlab.graphics.shapes import Drawing, Line, PolyLine, Polygon, String
from reportlab.lib import colors

from classifier.training import RunTrace, TraceRow
from core.exceptions import ConfigError
from harness.serializers import SelectionRoundSerializer, TraceRowSerializer

logger = logging.getLogger(__name__)

TRACE_FIELDS = ['epoch', 'labeled_size', 'evaluations', 'rotation_distance', 'loss', 'test_accuracy']
SELECTION_FIELDS = ['round', 'chosen_x', 'score', 'labeled_size', 'evaluations']
AGGREGATE_FIELDS = ['suite', 'evaluations', 'mean_accuracy', 'std_accuracy', 'mean_labeled_size', 'runs']
RATIO_FIELDS = ['classifier', 'pattern', 'strategy', 'labeling_ratio', 'computation_ratio', 'matched']
LABEL_FIELDS = ['suite', 'labeled_size', 'mean_accuracy', 'runs']

PALETTE = [
    colors.HexColor('#1f77b4'), colors.HexColor('#d62728'), colors.HexColor('#2ca02c'),
    colors.HexColor('#9467bd'), colors.HexColor('#ff7f0e'), colors.HexColor('#8c564b'),
]


def _exact(value) -> str:
    return repr(float(value))


def write_csv(path, fieldnames, rows) -> Path:
    """Escribir filas dict a CSV; los errores de E/S incluyen la ruta."""
    path = Path(path)
    try:
        with path.open('w', newline='', encoding='utf-8') as handle:
            writer = csv.DictWriter(handle, fieldnames=fieldnames, lineterminator='\n')
            writer.writeheader()
            writer.writerows(rows)
    except OSError as exc:
        raise OSError(exc.errno, f'No se pudo escribir {path}: {exc.strerror}') from exc
    return path


def read_csv(path) -> list:
    path = Path(path)
    try:
        with path.open(newline='', encoding='utf-8') as handle:
            return list(csv.DictReader(handle))
    except OSError as exc:
        raise OSError(exc.errno, f'No se pudo leer {path}: {exc.strerror}') from exc


def write_trace(path, trace: RunTrace) -> Path:
    return write_csv(path, TRACE_FIELDS, TraceRowSerializer(trace.rows, many=True).data)


def read_trace(path) -> RunTrace:
    rows = [
        {key: (None if value == '' else value) for key, value in row.items()}
        for row in read_csv(path)
    ]
    serializer = TraceRowSerializer(data=rows, many=True)
    if not serializer.is_valid():
        raise ConfigError(f'{path}: filas de traza inválidas {serializer.errors}')
    return RunTrace([TraceRow(**row) for row in serializer.validated_data])


def write_selection_log(path, rounds) -> Path:
    return write_csv(path, SELECTION_FIELDS, SelectionRoundSerializer(rounds, many=True).data)


def read_selection_log(path) -> list:
    serializer = SelectionRoundSerializer(data=read_csv(path), many=True)
    if not serializer.is_valid():
        raise ConfigError(f'{path}: filas de selección inválidas {serializer.errors}')
    return [dict(row) for row in serializer.validated_data]


def aggregate_rows(suites) -> list:
    return [
        {
            'suite': suite.name,
            'evaluations': row.evaluations,
            'mean_accuracy': _exact(row.mean_accuracy),
            'std_accuracy': _exact(row.std_accuracy),
            'mean_labeled_size': _exact(row.mean_labeled_size),
            'runs': row.runs,
        }
        for suite in suites
        for row in suite.aggregate
    ]


def label_curve(suite) -> list:
    """Precisión media según el tamaño etiquetado; por corrida vale la última prueba de cada tamaño."""
    per_size = defaultdict(list)
    for run in suite.runs:
        last = {}
        for row in run.trace.probes():
            last[row.labeled_size] = row.test_accuracy
        for size, accuracy in last.items():
            per_size[size].append(accuracy)
    return [
        {
            'suite': suite.name,
            'labeled_size': size,
            'mean_accuracy': _exact(sum(values) / len(values)),
            'runs': len(values),
        }
        for size, values in sorted(per_size.items())
    ]


def ratio_row(al_suite, ratio) -> dict:
    config = al_suite.config
    return {
        'classifier': config.classifier,
        'pattern': config.pattern,
        'strategy': config.strategy,
        'labeling_ratio': _exact(ratio.labeling_ratio),
        'computation_ratio': _exact(ratio.computation_ratio),
        'matched': str(ratio.matched).lower(),
    }


def table_rows(ratio_rows) -> list:
    """Celdas por clasificador más el mínimo y la media sobre las celdas coincidentes."""
    rows = []
    by_classifier = defaultdict(list)
    for row in ratio_rows:
        by_classifier[row['classifier']].append(row)
    for classifier, cells in by_classifier.items():
        rows.extend(cells)
        matched = [c for c in cells if c['matched'] == 'true']
        for summary, reduce in (('min', min), ('mean', lambda v: sum(v) / len(v))):
            if matched:
                labeling = _exact(reduce([float(c['labeling_ratio']) for c in matched]))
                computation = _exact(reduce([float(c['computation_ratio']) for c in matched]))
            else:
                labeling = computation = ''
            rows.append({
                'classifier': classifier,
                'pattern': summary,
                'strategy': '',
                'labeling_ratio': labeling,
                'computation_ratio': computation,
                'matched': str(len(matched)),
            })
    return rows


def render_curves(suites, width: int = 640, height: int = 400) -> Drawing:
    """Precisión media vs evaluaciones, con banda de una desviación estándar."""
    margin = 60
    plot_w, plot_h = width - 2 * margin, height - 2 * margin
    max_eval = max((suite.final.evaluations for suite in suites), default=1) or 1

    def sx(e):
        return margin + plot_w * e / max_eval

    def sy(a):
        return margin + plot_h * min(max(a, 0.0), 1.0)

    drawing = Drawing(width, height)
    drawing.add(Line(margin, margin, margin + plot_w, margin, strokeColor=colors.black))
    drawing.add(Line(margin, margin, margin, margin + plot_h, strokeColor=colors.black))
    for tick in (0.0, 0.25, 0.5, 0.75, 1.0):
        drawing.add(String(margin - 8, sy(tick) - 3, f'{tick:.2f}', fontSize=8, textAnchor='end'))
    for tick in (0, max_eval // 2, max_eval):
        drawing.add(String(sx(tick), margin - 14, str(tick), fontSize=8, textAnchor='middle'))
    drawing.add(String(width / 2, 12, 'Evaluaciones', fontSize=10, textAnchor='middle'))
    drawing.add(String(12, height / 2, 'Precisión', fontSize=10))

    for k, suite in enumerate(suites):
        color = PALETTE[k % len(PALETTE)]
        rows = suite.aggregate
        upper = [(sx(r.evaluations), sy(r.mean_accuracy + r.std_accuracy)) for r in rows]
        lower = [(sx(r.evaluations), sy(r.mean_accuracy - r.std_accuracy)) for r in reversed(rows)]
        band = [coord for point in upper + lower for coord in point]
        drawing.add(Polygon(
            band,
            fillColor=colors.Color(color.red, color.green, color.blue, alpha=0.2),
            strokeColor=None,
        ))
        mean = [coord for r in rows for coord in (sx(r.evaluations), sy(r.mean_accuracy))]
        if len(rows) == 1:
            mean = mean + mean
        drawing.add(PolyLine(mean, strokeColor=color, strokeWidth=1.5))
        legend_y = height - 20 - 12 * k
        drawing.add(Line(width - 190, legend_y + 3, width - 175, legend_y + 3, strokeColor=color))
        drawing.add(String(width - 170, legend_y, suite.name, fontSize=8))
    return drawing


def write_curves_svg(path, suites) -> Path:
    path = Path(path)
    try:
        renderSVG.drawToFile(render_curves(suites), str(path))
    except OSError as exc:
        raise OSError(exc.errno, f'No se pudo escribir {path}: {exc.strerror}') from exc
    return path


def write_config_echo(path, configs, extra=None) -> Path:
    """Configuración resuelta, semillas y versión de artefactos en formato `clave = valor`."""
    lines = [
        f'artifact_version = {settings.PHOTONIC["ARTIFACT_VERSION"]}',
        '# costos de ruta en radianes del parámetro de rotación; la lámina física gira la mitad',
    ]
    for key, value in (extra or {}).items():
        lines.append(f'{key} = {value}')
    for config in configs:
        lines.append(f'[{config.name}]')
        for key, value in config.as_dict().items():
            if isinstance(value, (list, tuple)):
                value = ','.join(str(v) for v in value)
            lines.append(f'{key} = {value}')
    path = Path(path)
    try:
        path.write_text('\n'.join(lines) + '\n', encoding='utf-8')
    except OSError as exc:
        raise OSError(exc.errno, f'No se pudo escribir {path}: {exc.strerror}') from exc
    return path


def emit_outputs(suites, out_dir, ratios=None, extra=None) -> list:
    """Escribir todos los artefactos de un conjunto de suites en `out_dir`.

    `ratios` es una lista de pares (suite AL, CostRatioRow).
    """
    out_dir = Path(out_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OSError(exc.errno, f'No se pudo crear {out_dir}: {exc.strerror}') from exc

    written = []
    for suite in suites:
        for run in suite.runs:
            written.append(write_trace(out_dir / f'trace_{run.name}.csv', run.trace))
            if run.rounds:
                written.append(write_selection_log(out_dir / f'selection_{run.name}.csv', run.rounds))
    written.append(write_csv(out_dir / 'aggregate.csv', AGGREGATE_FIELDS, aggregate_rows(suites)))
    written.append(write_csv(
        out_dir / 'labels.csv', LABEL_FIELDS,
        [row for suite in suites for row in label_curve(suite)],
    ))
    if ratios is not None:
        rows = [ratio_row(suite, ratio) for suite, ratio in ratios]
        written.append(write_csv(out_dir / 'ratios.csv', RATIO_FIELDS, rows))
        written.append(write_csv(out_dir / 'table.csv', RATIO_FIELDS, table_rows(rows)))
    written.append(write_curves_svg(out_dir / 'curves.svg', suites))
    written.append(write_config_echo(out_dir / 'config.echo', [s.config for s in suites], extra))
    logger.info('Escritos %s artefactos en %s', len(written), out_dir)
    return written
