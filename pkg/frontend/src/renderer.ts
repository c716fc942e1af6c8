// Frame rendering: one inline span per visible cue, sized from the wire's
// size_pt. Spacing comes from CSS gaps so the DOM text content stays the
// exact concatenation of the visible cue texts.

import { FrameMessage } from './wire'

export const DEFAULT_PT_TO_PX = 4 / 3
export const TEXT_COLOR = 'rgb(255, 128, 130)'
export const BACKGROUND_COLOR = 'rgb(0, 0, 0)'

export class CaptionRenderer {
  private readonly container: HTMLElement
  private readonly latencyIndicator: HTMLElement
  private readonly ptToPx: number

  constructor(container: HTMLElement, latencyIndicator: HTMLElement, ptToPx = DEFAULT_PT_TO_PX) {
    this.container = container
    this.latencyIndicator = latencyIndicator
    this.ptToPx = ptToPx
    container.style.color = TEXT_COLOR
    container.style.backgroundColor = BACKGROUND_COLOR
  }

  render(frame: FrameMessage): void {
    const spans: HTMLElement[] = []
    for (const cue of frame.cues) {
      if (!cue.visible) continue
      const span = document.createElement('span')
      span.className = cue.is_keyword ? 'cue keyword' : 'cue func'
      span.textContent = cue.text
      span.style.fontSize = `${cue.size_pt * this.ptToPx}px`
      spans.push(span)
    }
    this.container.replaceChildren(...spans)
    this.latencyIndicator.hidden = !frame.overrun
  }

  clear(): void {
    this.container.replaceChildren()
    this.latencyIndicator.hidden = true
  }
}
