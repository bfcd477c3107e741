"""
Comando para entrenar sin aprendizaje activo sobre todo el pool.
"""
from active_learning.strategies import Strategy
from core.management.base import PhotonicCommand
from harness.outputs import emit_outputs
from harness.runner import run_suite
from qsim.circuits import ClassifierKind


class Command(PhotonicCommand):
    help = 'Entrena el clasificador con el pool completo y escribe trazas y agregados.'

    def add_command_arguments(self, parser):
        parser.add_argument('--classifier', choices=ClassifierKind.values)
        parser.add_argument('--pattern', type=int)
        parser.add_argument('--epochs', dest='non_al_epochs', type=int)

    def run(self, **options):
        config = self.load_config(
            options,
            strategy=Strategy.NONE,
            classifier=options.get('classifier'),
            pattern=options.get('pattern'),
            non_al_epochs=options.get('non_al_epochs'),
        )
        suite = run_suite(config, self.jobs(options))
        written = emit_outputs([suite], self.out_dir(options))

        final = suite.final
        self.stdout.write(
            f'{suite.name}: precisión final {final.mean_accuracy:.4f} '
            f'± {final.std_accuracy:.4f} con {final.evaluations} evaluaciones'
        )
        self.success(f'{len(written)} archivos escritos')
