"""
Comando para imprimir las cotas teóricas y, opcionalmente, simular la
calibración de la lámina de media onda.
"""
from core.management.base import PhotonicCommand
from harness.outputs import write_csv
from theory.bounds import bound_table
from theory.calibration import calibration_sweep

CALIBRATION_FIELDS = ['step', 'rho', 'expected', 'observed', 'fidelity']


class Command(PhotonicCommand):
    help = 'Imprime la precisión máxima de VQC y NEVQC por patrón.'

    def add_command_arguments(self, parser):
        parser.add_argument('--calibrate', action='store_true', help='Simular el barrido de calibración.')
        parser.add_argument('--steps', type=int, default=10000)
        parser.add_argument('--shots', type=int, default=2000)

    def run(self, **options):
        self.stdout.write('patrón  delta_beta  vqc     nevqc_rho2  nevqc')
        for row in bound_table():
            self.stdout.write(
                f'{row["pattern"]:<7} {row["delta_beta"]:<11.4f} {row["vqc_bound"]:<7.4f} '
                f'{row["nevqc_rho2"]:<11.5f} {row["nevqc_bound"]:.4f}'
            )

        if options.get('calibrate'):
            seed = options.get('seed')
            result = calibration_sweep(options['steps'], options['shots'], seed=seed)
            self.stdout.write(
                f'Calibración: fidelidad media {result.mean_fidelity:.6f}, '
                f'infidelidad media {result.mean_infidelity:.2e}'
            )
            if options.get('out'):
                out_dir = self.out_dir(options)
                out_dir.mkdir(parents=True, exist_ok=True)
                path = write_csv(out_dir / 'calibration.csv', CALIBRATION_FIELDS, result.rows())
                self.success(f'Escrito {path}')
