"""
Serializers para filas CSV de pools y grillas.
"""
from rest_framework import serializers

LABEL_TOKENS = {'+1': 1, '1': 1, '-1': -1, 'NA': None, '': None}


class DataPointSerializer(serializers.Serializer):
    """Serializer para una fila `x,label` con label en {+1, -1, NA}."""

    x = serializers.FloatField()
    label = serializers.CharField(allow_blank=True, default='NA')

    def validate_label(self, value):
        token = value.strip()
        if token not in LABEL_TOKENS:
            raise serializers.ValidationError(f'Etiqueta inválida: {value}')
        return LABEL_TOKENS[token]

    def to_representation(self, instance):
        label = instance.label
        return {
            'x': f'{instance.x:.12g}',
            'label': 'NA' if label is None else f'{label:+d}',
        }
