"""
Comando para entrenar con aprendizaje activo y compararlo contra el
entrenamiento sin AL de la misma configuración.
"""
from active_learning.strategies import Strategy
from core.management.base import PhotonicCommand
from harness.outputs import emit_outputs
from harness.runner import cost_ratios, run_matrix
from qsim.circuits import ClassifierKind


class Command(PhotonicCommand):
    help = 'Entrena con USAMP o QBC y reporta las razones de costo frente a no usar AL.'

    def add_command_arguments(self, parser):
        parser.add_argument('--classifier', choices=ClassifierKind.values)
        parser.add_argument('--pattern', type=int)
        parser.add_argument('--strategy', choices=[Strategy.USAMP, Strategy.QBC], default=Strategy.USAMP)
        parser.add_argument(
            '--cold-start', dest='cold_start', action='store_true',
            help='Reiniciar parámetros y Adam en cada ronda.',
        )

    def run(self, **options):
        shared = {
            'classifier': options.get('classifier'),
            'pattern': options.get('pattern'),
            'warm_start': False if options.get('cold_start') else None,
        }
        al_config = self.load_config(options, strategy=options['strategy'], **shared)
        baseline_config = self.load_config(options, strategy=Strategy.NONE, **shared)

        al_suite, baseline = run_matrix([al_config, baseline_config], self.jobs(options))
        ratio = cost_ratios(al_suite, baseline)
        written = emit_outputs([al_suite, baseline], self.out_dir(options), ratios=[(al_suite, ratio)])

        self.stdout.write(
            f'{al_suite.name}: etiquetado {ratio.labeling_ratio:.3f}, '
            f'cómputo {ratio.computation_ratio:.3f}, '
            f'{"alcanza" if ratio.matched else "no alcanza"} {ratio.target_accuracy:.4f}'
        )
        self.success(f'{len(written)} archivos escritos')
