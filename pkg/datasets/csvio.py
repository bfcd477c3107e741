"""
Exportación e importación CSV de pools y grillas (columnas `x,label`).
"""
import csv
from pathlib import Path

from core.exceptions import ConfigError
from datasets.patterns import DataPoint
from datasets.serializers import DataPointSerializer

FIELDS = ['x', 'label']


def write_points(path, points) -> Path:
    """Escribir puntos como CSV; los ángulos usan 12 cifras significativas."""
    path = Path(path)
    with path.open('w', newline='', encoding='utf-8') as handle:
        writer = csv.DictWriter(handle, fieldnames=FIELDS, lineterminator='\n')
        writer.writeheader()
        for row in DataPointSerializer(points, many=True).data:
            writer.writerow(row)
    return path


def read_points(path) -> list:
    """Leer puntos desde CSV validando cada fila."""
    path = Path(path)
    with path.open(newline='', encoding='utf-8') as handle:
        rows = list(csv.DictReader(handle))

    serializer = DataPointSerializer(data=rows, many=True)
    if not serializer.is_valid():
        raise ConfigError(f'{path}: filas inválidas {serializer.errors}')
    return [DataPoint(row['x'], row['label']) for row in serializer.validated_data]
