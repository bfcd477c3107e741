"""
Comando para comparar el backend muestreado contra el analítico.
"""
from core.management.base import PhotonicCommand
from harness.outputs import write_csv
from harness.runner import compare_suites
from qsim.circuits import ClassifierKind

COMPARE_FIELDS = ['seed', 'loss_error', 'accuracy_error']


class Command(PhotonicCommand):
    help = 'Error absoluto medio de pérdida y precisión entre disparos finitos y valores exactos.'

    def add_command_arguments(self, parser):
        parser.add_argument('--classifier', choices=ClassifierKind.values)
        parser.add_argument('--pattern', type=int)
        parser.add_argument('--shots', type=int)

    def run(self, **options):
        config = self.load_config(
            options,
            classifier=options.get('classifier'),
            pattern=options.get('pattern'),
            shots=options.get('shots'),
        )
        reports = compare_suites(config, self.jobs(options))

        rows = []
        for seed, report in reports:
            self.stdout.write(
                f'semilla {seed}: error de pérdida {report.loss_error:.5f}, '
                f'error de precisión {report.accuracy_error:.5f}'
            )
            rows.append({
                'seed': seed,
                'loss_error': repr(report.loss_error),
                'accuracy_error': repr(report.accuracy_error),
            })

        out_dir = self.out_dir(options)
        out_dir.mkdir(parents=True, exist_ok=True)
        path = write_csv(out_dir / 'compare.csv', COMPARE_FIELDS, rows)
        self.success(f'Escrito {path}')
