"""
Comando para estudiar la precisión según el tamaño etiquetado con distintas
épocas de entrenamiento por dato agregado.
"""
import numpy as np

from active_learning.loop import epoch_study
from classifier.estimator import ExpectationEstimator
from classifier.params import ModelParams
from core.management.base import PhotonicCommand
from datasets.patterns import generate_pool, generate_test_grid, get_pattern
from harness.config import run_streams
from harness.outputs import write_csv
from qsim.circuits import ClassifierKind

STUDY_FIELDS = ['epochs', 'labeled_size', 'test_accuracy']


class Command(PhotonicCommand):
    help = 'Crece el conjunto etiquetado por USAMP con 10, 20 y 30 épocas por dato.'

    def add_command_arguments(self, parser):
        parser.add_argument('--classifier', choices=ClassifierKind.values)
        parser.add_argument('--pattern', type=int)
        parser.add_argument('--epochs', type=int, nargs='+', default=[10, 20, 30])
        parser.add_argument('--max-labeled', dest='max_labeled', type=int)

    def run(self, **options):
        config = self.load_config(
            options, classifier=options.get('classifier'), pattern=options.get('pattern'),
        )
        seed = config.seeds[0]
        streams = run_streams(seed)
        pattern = get_pattern(config.pattern)
        pool = generate_pool(pattern, config.pool_size, seed=streams['data'], scheme=config.pool_scheme)
        shot_seed, select_seed = streams['shot'].integers(2**63, size=2)

        curves = epoch_study(
            pattern, pool, ModelParams.random(config.classifier, streams['init']),
            estimator_factory=lambda: ExpectationEstimator(
                config.backend, config.resolved_shots, np.random.default_rng(shot_seed)
            ),
            rng_factory=lambda: np.random.default_rng(select_seed),
            epochs_options=tuple(options['epochs']),
            max_labeled=options.get('max_labeled') or config.pool_size,
            test_grid=generate_test_grid(pattern, config.test_size),
            train_config=config.train_config(),
        )

        rows = []
        for epochs, points in curves.items():
            for labeled_size, accuracy in points:
                rows.append({
                    'epochs': epochs, 'labeled_size': labeled_size, 'test_accuracy': repr(accuracy),
                })
            self.stdout.write(f'{epochs} épocas por dato: precisión final {points[-1][1]:.4f}')

        out_dir = self.out_dir(options)
        out_dir.mkdir(parents=True, exist_ok=True)
        path = write_csv(out_dir / 'epoch_study.csv', STUDY_FIELDS, rows)
        self.success(f'Escrito {path}')
