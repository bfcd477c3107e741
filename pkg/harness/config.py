"""
Configuración de experimentos: valores por defecto, archivo `clave = valor`
y derivación de semillas.
"""
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path
from typing import Optional

import numpy as np
from django.conf import settings

from active_learning.loop import ALConfig
from active_learning.strategies import Strategy
from classifier.params import Backend, TrainConfig
from core.exceptions import ConfigError
from qsim.circuits import ClassifierKind

LIST_KEYS = {'seeds'}

# Orden fijo de los generadores derivados de la semilla de cada corrida.
STREAMS = ('data', 'init', 'shot', 'select')


@dataclass(frozen=True)
class ExperimentConfig:
    classifier: str = ClassifierKind.VQC
    pattern: int = 1
    strategy: str = Strategy.NONE
    seeds: tuple = (0, 1, 2, 3)
    backend: str = Backend.ANALYTIC
    shots: Optional[int] = None
    pool_size: int = 20
    al_rounds: int = 10
    epochs_per_round: int = 10
    non_al_epochs: int = 35
    test_size: int = 500
    probe_interval: int = 5
    count_selection_evals: bool = True
    warm_start: bool = True
    pool_scheme: str = 'random'
    route_metric: str = 'sum'
    learning_rate: float = 0.1
    adam_beta1: float = 0.9
    adam_beta2: float = 0.999
    adam_eps: float = 1e-8

    def __post_init__(self):
        object.__setattr__(self, 'classifier', ClassifierKind(self.classifier))
        object.__setattr__(self, 'strategy', Strategy(self.strategy))
        object.__setattr__(self, 'backend', Backend(self.backend))
        object.__setattr__(self, 'seeds', tuple(int(s) for s in self.seeds))

    @property
    def resolved_shots(self) -> int:
        if self.shots is not None:
            return self.shots
        photonic = settings.PHOTONIC
        if self.classifier == ClassifierKind.VQC:
            return photonic['VQC_SHOTS']
        return photonic['NEVQC_SHOTS']

    @property
    def name(self) -> str:
        return f'{self.classifier}_p{self.pattern}_{self.strategy}_{self.backend}'

    def train_config(self) -> TrainConfig:
        return TrainConfig(
            epochs=self.non_al_epochs,
            shots=self.resolved_shots,
            backend=self.backend,
            learning_rate=self.learning_rate,
            adam_beta1=self.adam_beta1,
            adam_beta2=self.adam_beta2,
            adam_eps=self.adam_eps,
            test_interval=self.probe_interval,
        )

    def al_config(self) -> ALConfig:
        return ALConfig(
            rounds=self.al_rounds,
            epochs_per_round=self.epochs_per_round,
            warm_start=self.warm_start,
            count_selection_evals=self.count_selection_evals,
            train=self.train_config(),
        )

    def resolved(self) -> 'ExperimentConfig':
        """Copia con los disparos fijados, lista para enviarse a otro proceso."""
        return replace(self, shots=self.resolved_shots)

    def with_overrides(self, **overrides) -> 'ExperimentConfig':
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})

    def as_dict(self) -> dict:
        data = asdict(self)
        data['seeds'] = list(self.seeds)
        return data


CONFIG_FIELDS = tuple(f.name for f in fields(ExperimentConfig))


def settings_defaults() -> dict:
    """Valores por defecto tomados de `settings.PHOTONIC`."""
    photonic = settings.PHOTONIC
    return {
        'seeds': list(photonic['DEFAULT_SEEDS']),
        'pool_size': photonic['POOL_SIZE'],
        'test_size': photonic['TEST_SIZE'],
        'route_metric': photonic['ROUTE_METRIC'],
        'learning_rate': photonic['ADAM_LEARNING_RATE'],
        'adam_beta1': photonic['ADAM_BETA1'],
        'adam_beta2': photonic['ADAM_BETA2'],
        'adam_eps': photonic['ADAM_EPS'],
    }


def parse_config_text(text: str) -> dict:
    """Leer líneas `clave = valor`; `#` inicia comentario y las listas van separadas por coma."""
    data = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if '=' not in line:
            raise ConfigError(f'Línea {number} sin "=": {raw.strip()}')
        key, value = (part.strip() for part in line.split('=', 1))
        if key in data:
            raise ConfigError(f'Clave repetida en la línea {number}: {key}')
        data[key] = [v.strip() for v in value.split(',') if v.strip()] if key in LIST_KEYS else value
    return data


def parse_config_file(path) -> dict:
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except (OSError, UnicodeDecodeError) as exc:
        raise ConfigError(f'No se pudo leer la configuración {path}: {exc}') from exc
    try:
        return parse_config_text(text)
    except ConfigError as exc:
        raise ConfigError(f'{path}: {exc}') from exc


def load_experiment_config(path=None, **overrides) -> ExperimentConfig:
    """Combinar defaults de settings, archivo y overrides de la CLI, en ese orden."""
    from harness.serializers import ExperimentConfigSerializer

    data = settings_defaults()
    if path is not None:
        data.update(parse_config_file(path))
    data.update({k: v for k, v in overrides.items() if v is not None})

    serializer = ExperimentConfigSerializer(data=data)
    if not serializer.is_valid():
        details = '; '.join(f'{key}: {" ".join(map(str, errs))}' for key, errs in serializer.errors.items())
        raise ConfigError(f'Configuración inválida ({details})')
    return ExperimentConfig(**serializer.validated_data)


def derive_seeds(master: int, n: int) -> list:
    """Semillas por corrida: hijos de SeedSequence(master), uno por corrida."""
    return [int(child.generate_state(1)[0]) for child in np.random.SeedSequence(master).spawn(n)]


def run_streams(seed: int) -> dict:
    """Generadores independientes de datos, inicialización, disparos y selección."""
    children = np.random.SeedSequence(seed).spawn(len(STREAMS))
    return {name: np.random.default_rng(child) for name, child in zip(STREAMS, children)}
