"""
Comando para planificar la ruta de rotación de una época y compararla con
la ruta sin planificar.
"""
from classifier.params import ModelParams
from core.exceptions import ConfigError
from core.management.base import PhotonicCommand
from datasets.patterns import generate_pool, get_pattern
from harness.config import run_streams
from harness.outputs import write_csv
from qsim.circuits import ClassifierKind
from route_planner.routes import naive_epoch_route, plan_epoch_route

ROUTE_FIELDS = ['step', 'x', 'theta1', 'theta2', 'leg_cost']


def parse_angles(text: str) -> list:
    try:
        return [float(v) for v in text.split(',') if v.strip()]
    except ValueError as exc:
        raise ConfigError(f'Lista de ángulos inválida: {text}') from exc


class Command(PhotonicCommand):
    help = 'Imprime la ruta planificada de una época, su costo y el de la ruta ingenua.'

    def add_command_arguments(self, parser):
        parser.add_argument('--classifier', choices=ClassifierKind.values)
        parser.add_argument('--pattern', type=int)
        parser.add_argument('--metric', dest='route_metric', choices=['sum', 'max'])
        parser.add_argument('--xs', help='Ángulos de datos separados por coma; por defecto, el pool.')
        parser.add_argument('--params', help='Parámetros del modelo separados por coma.')

    def run(self, **options):
        config = self.load_config(
            options,
            classifier=options.get('classifier'),
            pattern=options.get('pattern'),
            route_metric=options.get('route_metric'),
        )
        streams = run_streams(config.seeds[0])
        if options.get('xs'):
            xs = parse_angles(options['xs'])
        else:
            pool = generate_pool(
                get_pattern(config.pattern), config.pool_size,
                seed=streams['data'], scheme=config.pool_scheme,
            )
            xs = [point.x for point in pool]
        if options.get('params'):
            params = ModelParams(config.classifier, tuple(parse_angles(options['params'])))
        else:
            params = ModelParams.random(config.classifier, streams['init'])

        planned = plan_epoch_route(params, xs, config.route_metric)
        naive = naive_epoch_route(params, xs, config.route_metric)
        self.stdout.write('step  x         theta1    theta2    leg_cost')
        for row in planned.rows():
            theta2 = '' if row['theta2'] is None else f'{row["theta2"]:.6f}'
            self.stdout.write(
                f'{row["step"]:<5} {row["x"]:<9.6f} {row["theta1"]:<9.6f} {theta2:<9} {row["leg_cost"]:.6f}'
            )
        self.stdout.write(f'Costo planificado: {planned.total_cost:.6f} rad')
        self.stdout.write(f'Costo ingenuo: {naive.total_cost:.6f} rad')

        if options.get('out'):
            out_dir = self.out_dir(options)
            out_dir.mkdir(parents=True, exist_ok=True)
            path = write_csv(out_dir / 'route.csv', ROUTE_FIELDS, planned.rows())
            self.success(f'Escrito {path}')
