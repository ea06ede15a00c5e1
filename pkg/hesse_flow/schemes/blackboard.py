from .scheme import Scheme


class Blackboard(Scheme):
    def __init__(self, **kwargs):
        super().__init__()

        self.background_fill = '#222222'
        self.border_fill = '#3C3F41'
        self.grid_line_color = '#444444'
        self.body_background_color = '#2B2B2B'
        self.text_color = 'lightgrey'
        self.headline_color = 'darkgrey'

        self.decoration_color = {
            'int01': '#ff7f7f',
            'int1Inf': '#7fbfff',
            'intNeg': '#9fdf9f',
        }

        self.vertex_line_color = 'lightgrey'
        self.vertex_fill = {
            'over0': '#111111',
            'over1': 'white',
            'overInf': 0.5,
        }
        self.dessin_edge_color = 'lightgrey'

        self.table_color_even = '#404040'
        self.table_color_odd = '#333333'
        self.table_header_color = '#707070'
        self.tag_pre_background_color = '#444444'

        for name, value in kwargs.items():
            if not hasattr(self, name):
                raise AttributeError(f'Unknown scheme attribute "{name}"')
            setattr(self, name, value)
