import { beforeEach, describe, expect, it } from 'vitest'

import { CaptionRenderer, BACKGROUND_COLOR, TEXT_COLOR } from '../src/renderer'
import { cue, frame } from './fakeSocket'

function setup(ptToPx?: number) {
  document.body.innerHTML = '<main id="captions"></main><div id="latency" hidden></div>'
  const captions = document.getElementById('captions') as HTMLElement
  const latency = document.getElementById('latency') as HTMLElement
  return { captions, latency, renderer: new CaptionRenderer(captions, latency, ptToPx) }
}

describe('CaptionRenderer', () => {
  beforeEach(() => {
    document.body.innerHTML = ''
  })

  it('renders one span per visible cue at pt * 4/3 px', () => {
    const { captions, renderer } = setup()
    renderer.render(frame([cue('the', 12, false), cue('gunman', 18, true)]))
    const spans = Array.from(captions.querySelectorAll('span'))
    expect(spans.map((s) => s.textContent)).toEqual(['the', 'gunman'])
    expect(spans[0].style.fontSize).toBe('16px')
    expect(spans[1].style.fontSize).toBe('24px')
  })

  it('honors a custom pt scale factor', () => {
    const { captions, renderer } = setup(2)
    renderer.render(frame([cue('word', 18, true)]))
    const span = captions.querySelector('span') as HTMLElement
    expect(span.style.fontSize).toBe('36px')
  })

  it('omits hidden cues but keeps order of the rest', () => {
    const { captions, renderer } = setup()
    renderer.render(
      frame([cue('the', 12, false, false), cue('gunman', 18, true), cue('fled', 18, true)], 'keyword'),
    )
    const spans = Array.from(captions.querySelectorAll('span'))
    expect(spans.map((s) => s.textContent)).toEqual(['gunman', 'fled'])
  })

  it('keeps DOM text equal to the concatenation of visible cue texts', () => {
    const { captions, renderer } = setup()
    renderer.render(frame([cue('a', 12, false), cue('b', 18, true), cue('.', 18, true)]))
    expect(captions.textContent).toBe('ab.')
  })

  it('marks keyword and function spans with distinct classes', () => {
    const { captions, renderer } = setup()
    renderer.render(frame([cue('the', 12, false), cue('gunman', 18, true)]))
    const [func, keyword] = Array.from(captions.querySelectorAll('span'))
    expect(func.className).toContain('func')
    expect(keyword.className).toContain('keyword')
  })

  it('applies the pink-on-black palette', () => {
    const { captions } = setup()
    expect(captions.style.color).toBe(TEXT_COLOR)
    expect(captions.style.backgroundColor).toBe(BACKGROUND_COLOR)
  })

  it('shows the latency indicator only for overrun frames', () => {
    const { latency, renderer } = setup()
    renderer.render(frame([cue('x', 18, true)]))
    expect(latency.hidden).toBe(true)
    renderer.render(frame([cue('x', 18, true)], 'dynamik', { overrun: true }))
    expect(latency.hidden).toBe(false)
    renderer.render(frame([cue('x', 18, true)]))
    expect(latency.hidden).toBe(true)
  })

  it('clear() empties the stage', () => {
    const { captions, renderer } = setup()
    renderer.render(frame([cue('x', 18, true)]))
    renderer.clear()
    expect(captions.children.length).toBe(0)
  })
})
