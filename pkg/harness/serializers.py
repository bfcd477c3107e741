"""
Serializadores para validar la configuración de experimentos.
"""
from rest_framework import serializers

from active_learning.strategies import Strategy
from classifier.params import Backend
from datasets.patterns import PATTERNS, POOL_SCHEMES
from harness.config import CONFIG_FIELDS
from qsim.circuits import ClassifierKind
from route_planner.routes import Metric


class ExperimentConfigSerializer(serializers.Serializer):
    """Serializer para ExperimentConfig; rechaza claves desconocidas."""

    classifier = serializers.ChoiceField(choices=ClassifierKind.choices, required=False)
    pattern = serializers.ChoiceField(choices=sorted(PATTERNS), required=False)
    strategy = serializers.ChoiceField(choices=Strategy.choices, required=False)
    seeds = serializers.ListField(
        child=serializers.IntegerField(min_value=0), allow_empty=False, required=False
    )
    backend = serializers.ChoiceField(choices=Backend.choices, required=False)
    shots = serializers.IntegerField(min_value=1, allow_null=True, required=False)
    pool_size = serializers.IntegerField(min_value=2, required=False)
    al_rounds = serializers.IntegerField(min_value=0, required=False)
    epochs_per_round = serializers.IntegerField(min_value=0, required=False)
    non_al_epochs = serializers.IntegerField(min_value=0, required=False)
    test_size = serializers.IntegerField(min_value=1, required=False)
    probe_interval = serializers.IntegerField(min_value=1, required=False)
    count_selection_evals = serializers.BooleanField(required=False)
    warm_start = serializers.BooleanField(required=False)
    pool_scheme = serializers.ChoiceField(choices=POOL_SCHEMES, required=False)
    route_metric = serializers.ChoiceField(choices=Metric.choices, required=False)
    learning_rate = serializers.FloatField(min_value=0.0, required=False)
    adam_beta1 = serializers.FloatField(min_value=0.0, max_value=1.0, required=False)
    adam_beta2 = serializers.FloatField(min_value=0.0, max_value=1.0, required=False)
    adam_eps = serializers.FloatField(min_value=0.0, required=False)

    def to_internal_value(self, data):
        unknown = sorted(set(data) - set(CONFIG_FIELDS))
        if unknown:
            raise serializers.ValidationError({key: ['Clave desconocida.'] for key in unknown})
        return super().to_internal_value(data)

    def validate_pattern(self, value):
        return int(value)

    def validate(self, attrs):
        """Validar que el pool alcance para las rondas de aprendizaje activo."""
        strategy = attrs.get('strategy', Strategy.NONE)
        if strategy != Strategy.NONE:
            needed = Strategy(strategy).initial_size + attrs.get('al_rounds', 10)
            if attrs.get('pool_size', 20) < needed:
                raise serializers.ValidationError(
                    {'pool_size': [f'Se requieren al menos {needed} datos para {strategy}.']}
                )
        return attrs


def _exact(value) -> str:
    return '' if value is None else repr(float(value))


class TraceRowSerializer(serializers.Serializer):
    """Serializer para filas de traza; los flotantes se escriben con repr exacto."""

    epoch = serializers.IntegerField(min_value=0)
    labeled_size = serializers.IntegerField(min_value=0)
    evaluations = serializers.IntegerField(min_value=0)
    rotation_distance = serializers.FloatField()
    loss = serializers.FloatField()
    test_accuracy = serializers.FloatField(allow_null=True, default=None)

    def to_representation(self, instance):
        return {
            'epoch': instance.epoch,
            'labeled_size': instance.labeled_size,
            'evaluations': instance.evaluations,
            'rotation_distance': _exact(instance.rotation_distance),
            'loss': _exact(instance.loss),
            'test_accuracy': _exact(instance.test_accuracy),
        }


class SelectionRoundSerializer(serializers.Serializer):
    round = serializers.IntegerField(min_value=1)
    chosen_x = serializers.FloatField()
    score = serializers.FloatField()
    labeled_size = serializers.IntegerField(min_value=0)
    evaluations = serializers.IntegerField(min_value=0)

    def to_representation(self, instance):
        row = instance.as_row()
        for key in ('chosen_x', 'score'):
            row[key] = _exact(row[key])
        return row
